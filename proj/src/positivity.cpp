#include "lieherm/positivity.hpp"

#include <sstream>

namespace lieherm {

Form11Report herm_rep(const ExtForm& f) {
  const auto& cf = f.coframe();
  int n = cf->n();
  int p, q;
  if (f.is_zero()) {
    Form11Report rep;
    rep.h = ExactMatrix(n, n);
    rep.signature = {0, 0, n};
    return rep;
  }
  if (!f.pure_bidegree(&p, &q) || p != 1 || q != 1)
    fail(ErrorKind::NotType11, "herm_rep expects a (1,1)-form");
  if (!f.is_real()) fail(ErrorKind::NotRealForm, "herm_rep expects a real form");
  ExactMatrix h(n, n);
  GaussRational minus_i = -GaussRational::i();
  for (const auto& [m, c] : f.terms()) {
    int j = m[0];
    int k = m[1] - n;
    if (j >= n || k < 0) fail(ErrorKind::NotType11, "unexpected monomial");
    h.at(j, k) = minus_i * c;
  }
  Form11Report rep;
  rep.h = h;
  rep.signature = hermitian_signature(h);
  rep.rank = rep.signature.pos + rep.signature.neg;
  return rep;
}

std::string power_class_name(PowerClass c) {
  switch (c) {
    case PowerClass::PositiveSemiDef:
      return "positive_semidefinite";
    case PowerClass::NegativeSemiDef:
      return "negative_semidefinite";
    case PowerClass::Zero:
      return "zero";
    case PowerClass::Indefinite:
      return "indefinite";
  }
  return "?";
}

PowerSignReport power_semidefiniteness(const std::vector<Rational>& diag,
                                       int j) {
  if (j < 1 || j > static_cast<int>(diag.size()))
    fail(ErrorKind::InvalidExponent, "power exponent out of range");
  std::vector<int> signs;
  for (const Rational& r : diag)
    if (!r.is_zero()) signs.push_back(r.sign());
  PowerSignReport rep;
  rep.diag = diag;
  rep.exponent = j;
  int nz = static_cast<int>(signs.size());
  if (j > nz) {
    rep.classification = PowerClass::Zero;
    rep.nonzero_subset_count = 0;
    return rep;
  }
  // Enumerate all size-j subsets of the nonzero entries (sizes are desk
  // scale); classification is by the sign multiset of their products.
  bool has_pos = false, has_neg = false;
  long count = 0;
  std::vector<int> pick(j);
  for (int i = 0; i < j; ++i) pick[i] = i;
  while (true) {
    int s = 1;
    for (int i : pick) s *= signs[i];
    (s > 0 ? has_pos : has_neg) = true;
    ++count;
    int t = j - 1;
    while (t >= 0 && pick[t] == nz - j + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < j; ++u) pick[u] = pick[u - 1] + 1;
  }
  rep.nonzero_subset_count = count;
  if (has_pos && has_neg)
    rep.classification = PowerClass::Indefinite;
  else if (has_pos)
    rep.classification = PowerClass::PositiveSemiDef;
  else
    rep.classification = PowerClass::NegativeSemiDef;
  return rep;
}

uint64_t RationalRng::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long RationalRng::next_int(long lo, long hi) {
  return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
}

Rational RationalRng::next_rational() {
  return Rational(next_int(-9, 9), next_int(1, 4));
}

GaussRational RationalRng::next_gauss() {
  return GaussRational(next_rational(), next_rational());
}

FalsifierResult transversality_falsifier(const ExtForm& f, int trials,
                                         uint64_t seed) {
  const auto& cf = f.coframe();
  int n = cf->n();
  int p, q;
  if (!f.pure_bidegree(&p, &q) || p != q)
    fail(ErrorKind::NotType11, "falsifier expects a (p,p)-form");
  int copies = n - p;
  ExtForm vol = volume_form(cf);
  Monomial volmono = vol.terms().begin()->first;
  GaussRational volunit = vol.terms().begin()->second;

  RationalRng rng(seed);
  FalsifierResult out;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::string> desc;
    ExtForm theta = ExtForm::monomial(cf, {}, GaussRational(1));
    for (int l = 0; l < copies; ++l) {
      // Half the samples are sparse so rank-deficient directions get probed.
      bool sparse = rng.next_int(0, 1) == 1;
      uint64_t mask = rng.next_u64();
      ExtForm u(cf);
      std::ostringstream os;
      for (int j = 0; j < n; ++j) {
        GaussRational c = rng.next_gauss();
        if (sparse && ((mask >> j) & 1)) c = GaussRational(0);
        os << (j ? ", " : "(") << c.str();
        u = u + ExtForm::generator(cf, j) * c;
      }
      os << ")";
      desc.push_back(os.str());
      theta = theta.wedge(u.wedge(u.conj()) * GaussRational::i());
    }
    if (theta.is_zero()) continue;  // the zero form is not a test form
    ExtForm pairing = f.wedge(theta);
    GaussRational c = pairing.coefficient(volmono) / volunit;
    if (!c.is_real()) fail(ErrorKind::Internal, "non-real volume pairing");
    if (c.re.sign() <= 0) {
      out.falsified = true;
      out.pairing = c.re;
      std::ostringstream os;
      for (size_t i = 0; i < desc.size(); ++i)
        os << (i ? "; " : "") << desc[i];
      out.witness = os.str();
      return out;
    }
  }
  return out;
}

}  // namespace lieherm
