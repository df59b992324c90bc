#include "lieherm/ext_form.hpp"

#include <algorithm>
#include <sstream>

namespace lieherm {

std::shared_ptr<const Coframe> Coframe::make(const ComplexStructure& cs,
                                             std::vector<std::string> names) {
  auto cf = std::make_shared<Coframe>();
  cf->alg_ = cs.alg;
  cf->sigma_ = cs.sigma;
  cf->q_basis_ = cs.q_basis;
  cf->n_ = cs.n();
  if (2 * cf->n_ != cs.alg->dim())
    fail(ErrorKind::DimensionMismatch, "coframe needs dim g = 2n");
  if (names.empty() && cs.q_labels.size() == static_cast<size_t>(cf->n_))
    names = cs.q_labels;
  if (names.size() != static_cast<size_t>(cf->n_)) {
    names.clear();
    for (int j = 0; j < cf->n_; ++j) names.push_back(std::to_string(j));
  }
  cf->names_ = std::move(names);

  std::vector<Vec> full = cs.q_basis;
  for (const Vec& v : cs.q_basis) full.push_back(cs.sigma.apply(v));
  cf->zinv_ = ExactMatrix::from_columns(full).inverse();

  int m = 2 * cf->n_;
  cf->dgen_.assign(m, {});
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Vec br = cs.alg->bracket(full[a], full[b]);
      if (is_zero(br)) continue;
      Vec coords = cf->zinv_ * br;
      for (int c = 0; c < m; ++c)
        if (!coords[c].is_zero())
          cf->dgen_[c].emplace_back(a, b, -coords[c]);
    }
  cf->integrable_ = true;
  for (int c = 0; c < cf->n_ && cf->integrable_; ++c)
    for (const auto& [a, b, co] : cf->dgen_[c])
      if (a >= cf->n_ && b >= cf->n_) cf->integrable_ = false;
  return cf;
}

std::string Coframe::generator_name(int idx) const {
  if (idx < n_) return names_[idx];
  return names_[idx - n_] + "bar";
}

bool wedge_monomials(const Monomial& a, const Monomial& b, Monomial* out,
                     int* sign) {
  out->clear();
  out->reserve(a.size() + b.size());
  int s = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out->push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining a-elements.
      s += static_cast<int>(a.size() - i);
      out->push_back(b[j++]);
    }
  }
  while (i < a.size()) out->push_back(a[i++]);
  while (j < b.size()) out->push_back(b[j++]);
  *sign = (s % 2 == 0) ? 1 : -1;
  return true;
}

ExtForm ExtForm::generator(std::shared_ptr<const Coframe> cf, int idx) {
  ExtForm f(std::move(cf));
  f.terms_[{static_cast<uint8_t>(idx)}] = GaussRational(1);
  return f;
}

ExtForm ExtForm::monomial(std::shared_ptr<const Coframe> cf, Monomial m,
                          GaussRational c) {
  ExtForm f(std::move(cf));
  if (!std::is_sorted(m.begin(), m.end()) ||
      std::adjacent_find(m.begin(), m.end()) != m.end())
    fail(ErrorKind::Internal, "monomial indices must be strictly sorted");
  if (!c.is_zero()) f.terms_[std::move(m)] = std::move(c);
  return f;
}

int ExtForm::degree() const {
  if (terms_.empty()) return 0;
  size_t deg = terms_.begin()->first.size();
  for (const auto& [m, c] : terms_)
    if (m.size() != deg) fail(ErrorKind::Internal, "mixed-degree form");
  return static_cast<int>(deg);
}

GaussRational ExtForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRational(0) : it->second;
}

void ExtForm::add_term(const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtForm ExtForm::operator+(const ExtForm& o) const {
  if (cf_ != o.cf_) fail(ErrorKind::CoframeMismatch, "form addition");
  ExtForm r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ExtForm ExtForm::operator-(const ExtForm& o) const {
  if (cf_ != o.cf_) fail(ErrorKind::CoframeMismatch, "form subtraction");
  ExtForm r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

ExtForm ExtForm::operator*(const GaussRational& c) const {
  ExtForm r(cf_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_[m] = c * co;
  return r;
}

bool ExtForm::operator==(const ExtForm& o) const {
  return cf_ == o.cf_ && terms_ == o.terms_;
}

ExtForm ExtForm::wedge(const ExtForm& o) const {
  if (cf_ != o.cf_) fail(ErrorKind::CoframeMismatch, "wedge");
  ExtForm r(cf_);
  Monomial m;
  int sign;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      if (wedge_monomials(ma, mb, &m, &sign))
        r.add_term(m, GaussRational(sign) * ca * cb);
  return r;
}

ExtForm ExtForm::pow(int k) const {
  if (k < 0) fail(ErrorKind::InvalidExponent, "negative wedge power");
  ExtForm r = ExtForm::monomial(cf_, {}, GaussRational(1));
  for (int i = 0; i < k; ++i) r = r.wedge(*this);
  return r;
}

ExtForm ExtForm::d() const {
  ExtForm r(cf_);
  Monomial rest, merged;
  int sign;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      rest.assign(m.begin(), m.end());
      rest.erase(rest.begin() + static_cast<long>(i));
      GaussRational outer = (i % 2 == 0) ? c : -c;
      for (const auto& [a, b, co] : cf_->d_generator(m[i])) {
        Monomial two{static_cast<uint8_t>(a), static_cast<uint8_t>(b)};
        if (wedge_monomials(two, rest, &merged, &sign))
          r.add_term(merged, GaussRational(sign) * outer * co);
      }
    }
  }
  return r;
}

ExtForm ExtForm::conj() const {
  int n = cf_->n();
  ExtForm r(cf_);
  for (const auto& [m, c] : terms_) {
    Monomial flipped;
    flipped.reserve(m.size());
    for (uint8_t idx : m)
      flipped.push_back(static_cast<uint8_t>(idx < n ? idx + n : idx - n));
    // Re-sort, tracking the permutation sign.
    int sign = 1;
    for (size_t i = 0; i + 1 < flipped.size(); ++i)
      for (size_t j = 0; j + 1 < flipped.size() - i; ++j)
        if (flipped[j] > flipped[j + 1]) {
          std::swap(flipped[j], flipped[j + 1]);
          sign = -sign;
        }
    r.add_term(flipped, GaussRational(sign) * c.conj());
  }
  return r;
}

bool ExtForm::is_real() const { return conj() == *this; }

std::vector<std::pair<std::pair<int, int>, ExtForm>>
ExtForm::bidegree_components() const {
  int n = cf_->n();
  std::map<std::pair<int, int>, ExtForm> comps;
  for (const auto& [m, c] : terms_) {
    int p = 0, q = 0;
    for (uint8_t idx : m) (idx < n ? p : q) += 1;
    auto it = comps.find({p, q});
    if (it == comps.end()) it = comps.emplace(std::make_pair(p, q), ExtForm(cf_)).first;
    it->second.add_term(m, c);
  }
  std::vector<std::pair<std::pair<int, int>, ExtForm>> out;
  for (auto& [pq, f] : comps) out.emplace_back(pq, std::move(f));
  return out;
}

bool ExtForm::pure_bidegree(int* p, int* q) const {
  auto comps = bidegree_components();
  if (comps.size() != 1) return false;
  *p = comps[0].first.first;
  *q = comps[0].first.second;
  return true;
}

ExtForm ExtForm::part(int p, int q) const {
  int n = cf_->n();
  ExtForm r(cf_);
  for (const auto& [m, c] : terms_) {
    int mp = 0, mq = 0;
    for (uint8_t idx : m) (idx < n ? mp : mq) += 1;
    if (mp == p && mq == q) r.add_term(m, c);
  }
  return r;
}

ExtForm ExtForm::del() const {
  ExtForm r(cf_);
  for (const auto& [pq, f] : bidegree_components())
    r = r + f.d().part(pq.first + 1, pq.second);
  return r;
}

ExtForm ExtForm::delbar() const {
  ExtForm r(cf_);
  for (const auto& [pq, f] : bidegree_components())
    r = r + f.d().part(pq.first, pq.second + 1);
  return r;
}

ExtForm ExtForm::dc() const {
  // d^c = i(delbar - del); with this choice dd^c = 2i del delbar on pure
  // (p,p) forms.  Validated against the fibration identity in the tests.
  return (delbar() - del()) * GaussRational::i();
}

ExtForm ExtForm::j_act() const {
  ExtForm r(cf_);
  GaussRational i = GaussRational::i();
  for (const auto& [pq, f] : bidegree_components()) {
    int e = ((pq.second - pq.first) % 4 + 4) % 4;
    GaussRational fac(1);
    for (int t = 0; t < e; ++t) fac = fac * i;
    r = r + f * fac;
  }
  return r;
}

GaussRational ExtForm::eval(const std::vector<Vec>& args) const {
  if (terms_.empty()) return GaussRational(0);
  if (static_cast<int>(args.size()) != degree())
    fail(ErrorKind::DegreeMismatch, "eval arity");
  std::vector<Vec> coords;
  coords.reserve(args.size());
  for (const Vec& v : args) coords.push_back(cf_->coordinates(v));
  GaussRational total;
  int p = degree();
  for (const auto& [m, c] : terms_) {
    ExactMatrix P(p, p);
    for (int r = 0; r < p; ++r)
      for (int s = 0; s < p; ++s) P.at(r, s) = coords[s][m[r]];
    total += c * P.det();
  }
  return total;
}

std::string ExtForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (uint8_t idx : m) os << " " << cf_->generator_name(idx);
  }
  return os.str();
}

std::string ExtForm::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << "{\"indices\": [";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << ", ";
      os << '"' << cf_->generator_name(m[i]) << '"';
    }
    os << "], \"re\": \"" << c.re.str() << "\", \"im\": \"" << c.im.str()
       << "\"}";
  }
  os << "]";
  return os.str();
}

std::vector<ExtForm> structure_equations(
    const std::shared_ptr<const Coframe>& cf) {
  std::vector<ExtForm> eqs;
  for (int j = 0; j < cf->n(); ++j) eqs.push_back(ExtForm::generator(cf, j).d());
  return eqs;
}

namespace {

struct RescaleConstraint {
  // prod_j x_j^{e_j} * prod_j y_j^{f_j} = ratio, with y_j = conj(x_j).
  std::vector<int> e, f;
  GaussRational ratio;
};

bool build_constraints(const std::vector<ExtForm>& mine,
                       const EquationSet& target, int n,
                       std::vector<RescaleConstraint>* out) {
  for (int j = 0; j < n; ++j) {
    std::map<Monomial, GaussRational> t = target[j];
    for (const auto& [m, c] : mine[j].terms()) {
      auto it = t.find(m);
      if (it == t.end()) return false;  // support mismatch
      RescaleConstraint rc;
      rc.e.assign(n, 0);
      rc.f.assign(n, 0);
      rc.e[j] += 1;
      if (m.size() != 2) fail(ErrorKind::Internal, "structure equation degree");
      for (uint8_t idx : m) {
        if (idx < n)
          rc.e[idx] -= 1;
        else
          rc.f[idx - n] -= 1;
      }
      rc.ratio = it->second / c;
      out->push_back(std::move(rc));
      t.erase(it);
    }
    if (!t.empty()) return false;  // target has extra monomials
  }
  return true;
}

bool verify_assignment(const std::vector<RescaleConstraint>& cons,
                       const std::vector<GaussRational>& x) {
  for (const auto& rc : cons) {
    GaussRational lhs(1);
    for (size_t j = 0; j < x.size(); ++j) {
      for (int t = 0; t < rc.e[j]; ++t) lhs = lhs * x[j];
      for (int t = 0; t > rc.e[j]; --t) lhs = lhs / x[j];
      GaussRational y = x[j].conj();
      for (int t = 0; t < rc.f[j]; ++t) lhs = lhs * y;
      for (int t = 0; t > rc.f[j]; --t) lhs = lhs / y;
    }
    if (lhs != rc.ratio) return false;
  }
  return true;
}

bool dfs_assign(const std::vector<RescaleConstraint>& cons,
                const std::vector<GaussRational>& candidates,
                std::vector<GaussRational> x, std::vector<bool> known,
                std::vector<GaussRational>* result) {
  // Propagate constraints whose only unknown appears purely as x or conj(x)
  // with exponent +-1; everything else is settled by branching.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& rc : cons) {
      int unknown = -1;
      bool many = false;
      for (size_t j = 0; j < x.size() && !many; ++j) {
        if (known[j] || (rc.e[j] == 0 && rc.f[j] == 0)) continue;
        if (unknown >= 0)
          many = true;
        else
          unknown = static_cast<int>(j);
      }
      if (many || unknown < 0) continue;
      GaussRational rhs = rc.ratio;
      for (size_t j = 0; j < x.size(); ++j) {
        if (!known[j]) continue;
        for (int t = 0; t < rc.e[j]; ++t) rhs = rhs / x[j];
        for (int t = 0; t > rc.e[j]; --t) rhs = rhs * x[j];
        GaussRational y = x[j].conj();
        for (int t = 0; t < rc.f[j]; ++t) rhs = rhs / y;
        for (int t = 0; t > rc.f[j]; --t) rhs = rhs * y;
      }
      int e = rc.e[unknown], f = rc.f[unknown];
      GaussRational val;
      if (e == 1 && f == 0)
        val = rhs;
      else if (e == -1 && f == 0)
        val = GaussRational(1) / rhs;
      else if (e == 0 && f == 1)
        val = rhs.conj();
      else if (e == 0 && f == -1)
        val = (GaussRational(1) / rhs).conj();
      else
        continue;
      if (val.is_zero()) return false;
      x[unknown] = val;
      known[unknown] = true;
      progress = true;
    }
  }
  size_t next = 0;
  while (next < x.size() && known[next]) ++next;
  if (next == x.size()) {
    if (verify_assignment(cons, x)) {
      *result = x;
      return true;
    }
    return false;
  }
  for (const GaussRational& c : candidates) {
    if (c.is_zero()) continue;
    std::vector<GaussRational> x2 = x;
    std::vector<bool> k2 = known;
    x2[next] = c;
    k2[next] = true;
    if (dfs_assign(cons, candidates, std::move(x2), std::move(k2), result))
      return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<GaussRational>> match_up_to_rescaling(
    const std::vector<ExtForm>& mine, const EquationSet& target) {
  if (mine.empty() || mine.size() != target.size()) return std::nullopt;
  int n = static_cast<int>(mine.size());
  std::vector<RescaleConstraint> cons;
  if (!build_constraints(mine, target, n, &cons)) return std::nullopt;

  std::vector<GaussRational> candidates = {
      GaussRational(1), GaussRational(-1), GaussRational::i(),
      -GaussRational::i()};
  for (const auto& rc : cons) {
    bool have = false;
    for (const auto& c : candidates)
      if (c == rc.ratio) have = true;
    if (!have && !rc.ratio.is_zero()) {
      candidates.push_back(rc.ratio);
      candidates.push_back(GaussRational(1) / rc.ratio);
      candidates.push_back(rc.ratio.conj());
      candidates.push_back(-rc.ratio);
    }
  }
  std::vector<GaussRational> x(n, GaussRational(1));
  std::vector<bool> known(n, false);
  std::vector<GaussRational> result;
  if (dfs_assign(cons, candidates, std::move(x), std::move(known), &result))
    return result;
  return std::nullopt;
}

ExtForm diagonal_decomposable(const std::shared_ptr<const Coframe>& cf,
                              const std::vector<int>& idx) {
  ExtForm r = ExtForm::monomial(cf, {}, GaussRational(1));
  for (int s : idx) {
    ExtForm pair =
        ExtForm::generator(cf, s).wedge(ExtForm::generator(cf, s + cf->n())) *
        GaussRational::i();
    r = r.wedge(pair);
  }
  return r;
}

ExtForm volume_form(const std::shared_ptr<const Coframe>& cf) {
  std::vector<int> all;
  for (int j = 0; j < cf->n(); ++j) all.push_back(j);
  return diagonal_decomposable(cf, all);
}

int diagonal_positive_combination(const ExtForm& f) {
  if (f.is_zero()) return 0;
  const auto& cf = f.coframe();
  int n = cf->n();
  int deg = f.degree();
  if (deg % 2 != 0) return 0;
  int p = deg / 2;
  ExtForm residual = f;
  int sign = 0;
  // Peel off diagonal decomposable pieces; any leftover disqualifies.
  while (!residual.is_zero()) {
    const auto& [m, c] = *residual.terms().begin();
    std::vector<int> base;
    for (int i = 0; i < p; ++i) {
      if (m[i] >= n) return 0;
      base.push_back(m[i]);
    }
    for (int i = 0; i < p; ++i)
      if (m[p + i] != base[i] + n) return 0;
    ExtForm dec = diagonal_decomposable(cf, base);
    GaussRational unit = dec.coefficient(m);
    if (unit.is_zero()) fail(ErrorKind::Internal, "bad decomposable unit");
    GaussRational coeff = c / unit;
    if (!coeff.is_real()) return 0;
    int s = coeff.re.sign();
    if (sign == 0)
      sign = s;
    else if (sign != s)
      return 0;
    residual = residual - dec * coeff;
  }
  return sign;
}

}  // namespace lieherm
