#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieherm/ext_form.hpp"

namespace lieherm {

/// Hermitian-matrix presentation of a real (1,1)-form f = i sum h_jk eta^j ^
/// conj(eta^k), with exact rank and signature.
struct Form11Report {
  ExactMatrix h;
  int rank = 0;
  Signature signature;

  bool positive_semidefinite() const {
    return signature.neg == 0 && signature.pos > 0;
  }
  bool negative_semidefinite() const {
    return signature.pos == 0 && signature.neg > 0;
  }
  bool semidefinite() const { return signature.pos == 0 || signature.neg == 0; }
};

Form11Report herm_rep(const ExtForm& f);

enum class PowerClass { PositiveSemiDef, NegativeSemiDef, Zero, Indefinite };

std::string power_class_name(PowerClass c);

/// Sign pattern of all size-j products of the nonzero entries of a diagonal
/// coefficient list (the omega_{j,l}-frame diagonal of an exact (1,1)-form).
struct PowerSignReport {
  std::vector<Rational> diag;
  int exponent = 0;
  PowerClass classification = PowerClass::Zero;
  long nonzero_subset_count = 0;
};

PowerSignReport power_semidefiniteness(const std::vector<Rational>& diag, int j);

/// Deterministic pseudo-random Gaussian rationals with small numerators and
/// denominators, reproducible from the seed.
class RationalRng {
 public:
  explicit RationalRng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  uint64_t next_u64();
  long next_int(long lo, long hi);  // inclusive
  Rational next_rational();          // numerator in [-9,9], denominator in [1,4]
  GaussRational next_gauss();

 private:
  uint64_t state_;
};

struct FalsifierResult {
  bool falsified = false;
  std::string witness;  // covectors of the failing decomposable form
  Rational pairing;     // the offending coefficient against Vol
};

/// Samples random decomposable (n-p, n-p)-forms and pairs them with f; a
/// non-positive pairing falsifies transversality of f.  Deterministic in
/// seed; Undetermined (falsified=false) after `trials` clean samples.
FalsifierResult transversality_falsifier(const ExtForm& f, int trials,
                                         uint64_t seed);

}  // namespace lieherm
