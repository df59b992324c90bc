#pragma once

#include <map>
#include <memory>

#include "lieherm/involution.hpp"

namespace lieherm {

/// Pairing constants of the split conjugation on sl(2m-1):
///   B_j^k = B(e_{a_j^k}, sigma(e_{a_{2m-k-j}^k}))
/// in the normalization where B(H_alpha, H_alpha) = 2 (Killing / 2N).
class SigmaConstants {
 public:
  SigmaConstants(std::shared_ptr<const LieAlgebra> alg, const Involution& sigma,
                 int m);

  int m() const { return m_; }

  const GaussRational& at(int j, int k) const;
  const GaussRational& at(const Root& r) const { return at(r.start, r.len); }

  /// B_{gamma_j} for gamma_j = a_j^{2(m-j)}; real by construction.
  const GaussRational& gamma(int j) const { return at(j, 2 * (m_ - j)); }

  /// Checks sigma(B_j^k) = B_{2m-k-j}^k for the whole table.
  bool conjugation_symmetry() const;

  /// Checks B_{gamma_j} real for j = 1..m-1.
  bool gamma_reality() const;

  /// Checks B_{a+b} = -B_a B_b B(H_a, H_b) for every pair of positive roots
  /// whose sum is a root (normalized form).  The displayed identity without
  /// the minus sign cannot hold for any Chevalley normalization; see tests.
  bool product_identity() const;

 private:
  std::shared_ptr<const LieAlgebra> alg_;
  int m_;
  std::map<std::pair<int, int>, GaussRational> table_;
};

}  // namespace lieherm
