#include "lieherm/flag.hpp"

#include <functional>
#include <sstream>

#include "lieherm/positivity.hpp"

namespace lieherm {

WeightCombo WeightCombo::zero(int N) {
  WeightCombo w;
  w.N = N;
  w.B.assign(N - 1, Rational(0));
  return w;
}

WeightCombo WeightCombo::fundamental(int N, int j) {
  if (j < 1 || j > N - 1) fail(ErrorKind::InvalidParameter, "weight index");
  WeightCombo w = zero(N);
  w.B[j - 1] = Rational(1);
  return w;
}

WeightCombo WeightCombo::operator+(const WeightCombo& o) const {
  if (N != o.N) fail(ErrorKind::DimensionMismatch, "weight combo add");
  WeightCombo w = *this;
  for (size_t i = 0; i < w.B.size(); ++i) w.B[i] += o.B[i];
  return w;
}

WeightCombo WeightCombo::operator-(const WeightCombo& o) const {
  if (N != o.N) fail(ErrorKind::DimensionMismatch, "weight combo sub");
  WeightCombo w = *this;
  for (size_t i = 0; i < w.B.size(); ++i) w.B[i] -= o.B[i];
  return w;
}

WeightCombo WeightCombo::scaled(const Rational& c) const {
  WeightCombo w = *this;
  for (auto& b : w.B) b *= c;
  return w;
}

std::vector<Rational> WeightCombo::prefix() const {
  std::vector<Rational> p(B.size() + 1, Rational(0));
  for (size_t i = 0; i < B.size(); ++i) p[i + 1] = p[i] + B[i];
  return p;
}

std::vector<std::vector<Rational>> fundamental_weights(int N) {
  std::vector<std::vector<Rational>> w;
  for (int j = 1; j <= N - 1; ++j) {
    std::vector<Rational> v(N, Rational(0));
    for (int t = 0; t < j; ++t) v[t] = Rational(1);
    w.push_back(std::move(v));
  }
  return w;
}

bool fundamental_weight_pairing_check(int N) {
  auto alg = LieAlgebra::build_sl(N);
  // w_j(h_l) = delta_jl; pair through the Killing-dual of each simple root.
  for (int l = 1; l <= N - 1; ++l) {
    Vec H = alg->killing_dual(Root{l, 1});
    GaussRational denom = alg->root_eval(Root{l, 1}, H);
    for (int j = 1; j <= N - 1; ++j) {
      GaussRational num = H[alg->h_index(j)];  // w_j evaluated on H
      GaussRational want((j == l) ? 1 : 0);
      if (GaussRational(2) * num / denom != want) return false;
    }
  }
  return true;
}

int DiagTwoForm::pair_index(int N, int j, int l) {
  if (j < 1 || l <= j || l > N) fail(ErrorKind::Internal, "bad pair");
  int idx = 0;
  for (int a = 1; a < j; ++a) idx += N - a;
  return idx + (l - j - 1);
}

std::pair<int, int> DiagTwoForm::pair_of(int N, int idx) {
  for (int j = 1; j <= N - 1; ++j) {
    if (idx < N - j) return {j, j + 1 + idx};
    idx -= N - j;
  }
  fail(ErrorKind::Internal, "bad pair index");
}

int DiagTwoForm::rank() const {
  int r = 0;
  for (const Rational& c : coeff)
    if (!c.is_zero()) ++r;
  return r;
}

std::vector<Rational> DiagTwoForm::nonzero() const {
  std::vector<Rational> out;
  for (const Rational& c : coeff)
    if (!c.is_zero()) out.push_back(c);
  return out;
}

DiagTwoForm dbeta(const WeightCombo& b) {
  DiagTwoForm f;
  f.N = b.N;
  f.coeff.assign(DiagTwoForm::pair_count(b.N), Rational(0));
  std::vector<Rational> tilde = b.prefix();
  for (int j = 1; j <= b.N - 1; ++j)
    for (int l = j + 1; l <= b.N; ++l)
      f.coeff[DiagTwoForm::pair_index(b.N, j, l)] = tilde[l - 1] - tilde[j - 1];
  return f;
}

namespace {

void topform_rec(const std::vector<std::pair<DiagTwoForm, int>>& factors,
                 size_t fi, std::vector<bool>& used, Rational prod,
                 Rational* total) {
  if (fi == factors.size()) {
    *total += prod;
    return;
  }
  int k = factors[fi].second;
  const auto& F = factors[fi].first.coeff;
  int G = static_cast<int>(used.size());
  // Choose k unused generators for this factor; factor k! for the power.
  std::vector<int> pick;
  Rational fact(1);
  for (int t = 2; t <= k; ++t) fact *= Rational(t);
  std::vector<int> stack;
  // Iterative subset enumeration via recursion lambda.
  std::function<void(int, int, Rational)> choose = [&](int start, int left,
                                                       Rational acc) {
    if (left == 0) {
      topform_rec(factors, fi + 1, used, prod * fact * acc, total);
      return;
    }
    for (int g = start; g <= G - left; ++g) {
      if (used[g] || F[g].is_zero()) continue;
      used[g] = true;
      choose(g + 1, left - 1, acc * F[g]);
      used[g] = false;
    }
  };
  choose(0, k, Rational(1));
}

}  // namespace

Rational wedge_power_topform(
    const std::vector<std::pair<DiagTwoForm, int>>& factors) {
  if (factors.empty()) fail(ErrorKind::DegreeMismatch, "no factors");
  int N = factors[0].first.N;
  int G = DiagTwoForm::pair_count(N);
  int total_deg = 0;
  for (const auto& [f, k] : factors) {
    if (f.N != N) fail(ErrorKind::DimensionMismatch, "mixed N");
    if (k < 0) fail(ErrorKind::InvalidExponent, "negative exponent");
    total_deg += k;
  }
  if (total_deg != G)
    fail(ErrorKind::DegreeMismatch, "exponents must sum to the generator count");
  std::vector<bool> used(G, false);
  Rational total(0);
  topform_rec(factors, 0, used, Rational(1), &total);
  return total;
}

std::optional<Rational> astheno_c2(const WeightCombo& b1, const WeightCombo& b2,
                                   const WeightCombo& wk) {
  DiagTwoForm d1 = dbeta(b1), d2 = dbeta(b2), dk = dbeta(wk);
  int G = DiagTwoForm::pair_count(b1.N);
  Rational num = wedge_power_topform({{d1, 2}, {dk, G - 2}});
  Rational den = wedge_power_topform({{d2, 2}, {dk, G - 2}});
  if (den.is_zero())
    fail(ErrorKind::DegenerateDenominator, "(d b2)^2 ^ wK^(G-2) = 0");
  Rational c2 = -num / den;
  if (c2.sign() <= 0) return std::nullopt;
  return c2;
}

std::string diag_class_name(DiagClass c) {
  switch (c) {
    case DiagClass::Zero:
      return "zero";
    case DiagClass::PositiveDef:
      return "positive_definite";
    case DiagClass::NegativeDef:
      return "negative_definite";
    case DiagClass::PositiveSemi:
      return "positive_semidefinite";
    case DiagClass::NegativeSemi:
      return "negative_semidefinite";
    case DiagClass::Indefinite:
      return "indefinite";
  }
  return "?";
}

DiagClass classify_diag(const DiagTwoForm& f) {
  int pos = 0, negc = 0, zero = 0;
  for (const Rational& c : f.coeff) {
    if (c.is_zero())
      ++zero;
    else if (c.sign() > 0)
      ++pos;
    else
      ++negc;
  }
  if (pos == 0 && negc == 0) return DiagClass::Zero;
  if (pos > 0 && negc > 0) return DiagClass::Indefinite;
  if (pos > 0) return zero == 0 ? DiagClass::PositiveDef : DiagClass::PositiveSemi;
  return zero == 0 ? DiagClass::NegativeDef : DiagClass::NegativeSemi;
}

ScanResult semidef_scan(const WeightCombo& b1, const WeightCombo& b2,
                        long range) {
  if (range < 1) fail(ErrorKind::InvalidParameter, "range >= 1");
  int N = b1.N;
  int G = DiagTwoForm::pair_count(N);
  if ((N * N - 3) % 2 != 0)
    fail(ErrorKind::InvalidParameter, "need odd N for a T^2 quotient");
  int n = (N * N - 3) / 2;
  ScanResult out;
  for (long A = -range; A <= range; ++A)
    for (long C = -range; C <= range; ++C) {
      if (A == 0 && C == 0) continue;
      WeightCombo b = b1.scaled(Rational(A)) + b2.scaled(Rational(C));
      DiagTwoForm db = dbeta(b);
      ScanEntry e;
      e.A = A;
      e.C = C;
      e.cls = classify_diag(db);
      e.rank = db.rank();
      if (e.cls == DiagClass::PositiveDef || e.cls == DiagClass::NegativeDef ||
          e.cls == DiagClass::PositiveSemi || e.cls == DiagClass::NegativeSemi) {
        for (int p = std::max(1, n - e.rank); p <= n - 1; ++p)
          e.obstructed_p.insert(p);
      } else if (e.cls == DiagClass::Indefinite) {
        std::vector<Rational> diag = db.coeff;
        for (int j = 2; j <= G && j <= n - 1; ++j) {
          PowerSignReport pr = power_semidefiniteness(diag, j);
          if (pr.nonzero_subset_count > 0 &&
              (pr.classification == PowerClass::PositiveSemiDef ||
               pr.classification == PowerClass::NegativeSemiDef)) {
            e.power_results.emplace_back(j, power_class_name(pr.classification));
            if (n - j >= 1) e.obstructed_p.insert(n - j);
          }
        }
      }
      out.obstructed_p.insert(e.obstructed_p.begin(), e.obstructed_p.end());
      out.entries.push_back(std::move(e));
    }
  return out;
}

std::string scan_csv(const ScanResult& scan) {
  std::ostringstream os;
  os << "A,C,classification,rank,obstructed_p\n";
  for (const auto& e : scan.entries) {
    os << e.A << "," << e.C << "," << diag_class_name(e.cls) << "," << e.rank
       << ",";
    bool first = true;
    for (int p : e.obstructed_p) {
      if (!first) os << ";";
      first = false;
      os << p;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace lieherm
