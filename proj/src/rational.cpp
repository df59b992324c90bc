#include "lieherm/rational.hpp"

#include <ostream>
#include <sstream>

namespace lieherm {

Rational::Rational(long num, long den) {
  mpq_init(q_);
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) fail(ErrorKind::InvalidParameter, "empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) fail(ErrorKind::InvalidParameter, "malformed rational: " + s);
  }
  Rational r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
    fail(ErrorKind::InvalidParameter, "malformed rational: " + s);
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    fail(ErrorKind::DivisionByZero, "rational with zero denominator: " + s);
  if (mpz_sgn(mpq_denref(r.q_)) < 0) {
    mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
    mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
  }
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

std::string Rational::numerator_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

std::string Rational::denominator_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

bool GaussRational::sqrt(const GaussRational& z, GaussRational* out) {
  // z = (c+di)^2 means c^2 - d^2 = re, 2cd = im.  Reduce to rational square
  // roots of (re +- |z|)/2 where |z| = sqrt(re^2+im^2) must be rational.
  auto rat_sqrt = [](const Rational& r, Rational* root) -> bool {
    if (r.sign() < 0) return false;
    if (r.is_zero()) {
      *root = Rational(0);
      return true;
    }
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, r.str().c_str(), 10) != 0) {
      mpq_clear(q);
      return false;
    }
    mpz_t sn, sd;
    mpz_init(sn);
    mpz_init(sd);
    bool ok = mpz_perfect_square_p(mpq_numref(q)) &&
              mpz_perfect_square_p(mpq_denref(q));
    if (ok) {
      mpz_sqrt(sn, mpq_numref(q));
      mpz_sqrt(sd, mpq_denref(q));
      char* ns = mpz_get_str(nullptr, 10, sn);
      char* ds = mpz_get_str(nullptr, 10, sd);
      *root = Rational::parse(std::string(ns) + "/" + ds);
      void (*freefunc)(void*, size_t);
      mp_get_memory_functions(nullptr, nullptr, &freefunc);
      freefunc(ns, 0);
      freefunc(ds, 0);
    }
    mpz_clear(sn);
    mpz_clear(sd);
    mpq_clear(q);
    return ok;
  };

  Rational mod2 = z.norm();
  Rational mod;
  if (!rat_sqrt(mod2, &mod)) return false;
  Rational half(1, 2);
  Rational c2 = (z.re + mod) * half;
  Rational d2 = (mod - z.re) * half;
  Rational c, d;
  if (!rat_sqrt(c2, &c) || !rat_sqrt(d2, &d)) return false;
  if ((c * d * Rational(2)) != z.im) d = -d;
  if ((c * d * Rational(2)) != z.im) return false;
  Rational cc = c * c - d * d;
  if (cc != z.re) return false;
  *out = GaussRational(c, d);
  return true;
}

std::string GaussRational::str() const {
  if (im.is_zero()) return re.str();
  std::ostringstream os;
  if (!re.is_zero()) {
    os << re.str();
    if (im.sign() > 0) os << "+";
  }
  if (im == Rational(1))
    os << "i";
  else if (im == Rational(-1))
    os << "-i";
  else
    os << im.str() << "i";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  return os << z.str();
}

GaussRational gq_arith(const GaussRational& a, const GaussRational& b, GqOp op) {
  switch (op) {
    case GqOp::Add:
      return a + b;
    case GqOp::Mul:
      return a * b;
    case GqOp::Div:
      return a / b;
    case GqOp::Conj:
      return a.conj();
  }
  fail(ErrorKind::Internal, "bad GqOp");
}

}  // namespace lieherm
