#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieherm/lie_algebra.hpp"

namespace lieherm {

/// Rational combination sum_j B_j w_j of the fundamental weights of sl(N);
/// the characteristic-class data of a torus bundle over the flag manifold.
struct WeightCombo {
  int N = 5;
  std::vector<Rational> B;  // size N-1

  static WeightCombo zero(int N);
  static WeightCombo fundamental(int N, int j);     // w_j
  WeightCombo operator+(const WeightCombo& o) const;
  WeightCombo operator-(const WeightCombo& o) const;
  WeightCombo scaled(const Rational& c) const;

  /// Prefix sums B~_j = B_1 + ... + B_j, B~_0 = 0.
  std::vector<Rational> prefix() const;
};

/// Fundamental weights as vectors in Q^N (e-coordinates): w_j = e_1+..+e_j.
std::vector<std::vector<Rational>> fundamental_weights(int N);

/// Verifies 2(w_j, a_l)/(a_l, a_l) = delta_jl against the Killing-derived
/// pairing of lie_core.
bool fundamental_weight_pairing_check(int N);

/// Two-form diagonal in the omega_{j,l} frame (pairs j < l, ordered
/// lexicographically); the generators commute and square to zero.
struct DiagTwoForm {
  int N = 5;
  std::vector<Rational> coeff;  // size N(N-1)/2

  static int pair_count(int N) { return N * (N - 1) / 2; }
  static int pair_index(int N, int j, int l);
  static std::pair<int, int> pair_of(int N, int idx);

  int rank() const;
  std::vector<Rational> nonzero() const;
};

/// d beta of a weight combination: coefficient B~_{l-1} - B~_{j-1} on
/// omega_{j,l}.
DiagTwoForm dbeta(const WeightCombo& b);

/// Exact coefficient of the top form prod omega_{j,l} in the product
/// prod_i F_i^{k_i}; requires sum k_i = number of generators.
Rational wedge_power_topform(
    const std::vector<std::pair<DiagTwoForm, int>>& factors);

/// c^2 = -[(d b1)^2 ^ wK^8] / [(d b2)^2 ^ wK^8]; nullopt if c^2 <= 0,
/// DegenerateDenominator if the denominator vanishes.
std::optional<Rational> astheno_c2(const WeightCombo& b1, const WeightCombo& b2,
                                   const WeightCombo& wk);

enum class DiagClass { Zero, PositiveDef, NegativeDef, PositiveSemi,
                       NegativeSemi, Indefinite };

std::string diag_class_name(DiagClass c);
DiagClass classify_diag(const DiagTwoForm& f);

struct ScanEntry {
  long A = 0, C = 0;
  DiagClass cls = DiagClass::Zero;
  int rank = 0;
  std::set<int> obstructed_p;  // p-Kahler obstructions from this combination
  std::vector<std::pair<int, std::string>> power_results;  // (exponent, class)
};

struct ScanResult {
  std::vector<ScanEntry> entries;
  std::set<int> obstructed_p;  // union over all combinations
};

/// All integer (A, C) with |A|, |C| <= range, not both zero: classify
/// d(A b1 + C b2); for semidefinite combinations record obstructed p =
/// {n - rank .. n-1}; for indefinite ones scan wedge powers 2..#generators
/// with the subset-product criterion and record p = n - j for single-sign
/// powers.  n = dim_C SU(N)/T^2 = (N^2 + 1)/2 - 2 ... for N = 5, n = 11.
ScanResult semidef_scan(const WeightCombo& b1, const WeightCombo& b2,
                        long range);

std::string scan_csv(const ScanResult& scan);

}  // namespace lieherm
