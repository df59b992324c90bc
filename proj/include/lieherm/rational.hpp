#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "lieherm/error.hpp"

namespace lieherm {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT: implicit on purpose, mirrors integer literals
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "p", "-p", "p/q". Throws InvalidParameter on malformed input.
  static Rational parse(const std::string& s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_, q_, o.q_);
    return r;
  }
  Rational operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
  }
  Rational operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }
  bool operator<=(const Rational& o) const { return mpq_cmp(q_, o.q_) <= 0; }
  bool operator>(const Rational& o) const { return mpq_cmp(q_, o.q_) > 0; }
  bool operator>=(const Rational& o) const { return mpq_cmp(q_, o.q_) >= 0; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  /// Lowest-terms "p" or "p/q" with q > 1.
  std::string str() const;

  std::string numerator_str() const;
  std::string denominator_str() const;

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i): the scalar field for every computation in the engine.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussRational(long n) : re(n) {}                 // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational operator+(const GaussRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussRational operator-(const GaussRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussRational operator*(const GaussRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRational operator/(const GaussRational& o) const {
    if (o.is_zero())
      fail(ErrorKind::DivisionByZero, "gaussian rational division by zero");
    Rational n = o.norm();
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  bool operator==(const GaussRational& o) const {
    return re == o.re && im == o.im;
  }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }

  /// Exact square root in Q(i) if one exists.
  static bool sqrt(const GaussRational& z, GaussRational* out);

  /// "a", "bi", "a+bi", "a-bi" with exact rational parts.
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

enum class GqOp { Add, Mul, Div, Conj };

/// Dispatch wrapper used by the scenario layer; Conj ignores b.
GaussRational gq_arith(const GaussRational& a, const GaussRational& b, GqOp op);

}  // namespace lieherm
