#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lieherm/lie_algebra.hpp"

namespace lieherm {

/// (Anti)linear map on a LieAlgebra, stored as a matrix over the basis.
/// Antilinear maps conjugate the coordinates before applying the matrix.
class Involution {
 public:
  Involution() = default;
  Involution(std::shared_ptr<const LieAlgebra> alg, ExactMatrix mat,
             bool antilinear)
      : alg_(std::move(alg)), mat_(std::move(mat)), antilinear_(antilinear) {}

  const std::shared_ptr<const LieAlgebra>& algebra() const { return alg_; }
  const ExactMatrix& matrix() const { return mat_; }
  bool antilinear() const { return antilinear_; }

  Vec apply(const Vec& v) const;
  GaussRational apply_scalar(const GaussRational& c) const {
    return antilinear_ ? c.conj() : c;
  }

  /// this . other
  Involution compose(const Involution& other) const;

  bool is_involutive() const;
  bool is_bracket_compatible() const;
  bool commutes_with(const Involution& other) const;

  /// Diagram-flip Cartan involution of sl(N): theta(h_j) = h_{N-j},
  /// theta(e_{a_j}) = e_{a_{N-j}} on simple root vectors, propagated to the
  /// other root spaces through brackets.  Linear.
  static Involution cartan_theta(std::shared_ptr<const LieAlgebra> alg);

  /// Compact conjugation: tau(h) = -h, tau(e_alpha) = -e_{-alpha}, extended
  /// antilinearly; tau(c) = -c on central generators.
  static Involution compact_tau(std::shared_ptr<const LieAlgebra> alg);

  /// sigma = tau . theta: the conjugation whose fixed set is the split form.
  static Involution split_sigma(std::shared_ptr<const LieAlgebra> alg);

  /// Plain coordinatewise conjugation; a conjugation whenever the structure
  /// constants are real.
  static Involution entrywise_conjugation(std::shared_ptr<const LieAlgebra> alg);

  /// Matrix export in the structure-constant JSON format.
  std::string json() const;

 private:
  std::shared_ptr<const LieAlgebra> alg_;
  ExactMatrix mat_;
  bool antilinear_ = false;
};

/// Real form data of a conjugation: a real basis of the fixed-point set and
/// the Killing signature on it.
struct RealFormInfo {
  std::vector<Vec> basis;  // fixed vectors, real-linearly independent
  Signature killing_signature;
};

RealFormInfo real_form(const Involution& sigma);

}  // namespace lieherm
