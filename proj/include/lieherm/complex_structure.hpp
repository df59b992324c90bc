#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieherm/sigma_constants.hpp"

namespace lieherm {

/// Invariant complex structure presented as a complex subalgebra q with
/// g = q (+) sigma(q).
struct ComplexStructure {
  std::shared_ptr<const LieAlgebra> alg;
  Involution sigma;
  std::vector<Vec> q_basis;
  std::vector<std::string> q_labels;

  int n() const { return static_cast<int>(q_basis.size()); }

  /// Basis matrix and labels in JSON, alongside the algebra export.
  std::string json() const;
};

struct SubalgebraCheck {
  bool closed = false;
  bool complement = false;
  std::string witness;  // offending bracket or intersection direction
};

/// closed = [S,S] in S; complement = S (+) sigma(S) = g.
SubalgebraCheck subalgebra_complement_check(
    const std::shared_ptr<const LieAlgebra>& alg, const Involution& sigma,
    const std::vector<Vec>& span, const std::vector<std::string>& labels = {});

/// Validates both invariants and returns the structure; throws Internal on
/// failure.  Dependent spanning sets are echelonized silently.
ComplexStructure make_complex_structure(std::shared_ptr<const LieAlgebra> alg,
                                        const Involution& sigma,
                                        std::vector<Vec> q_basis,
                                        std::vector<std::string> labels = {});

struct RegularityCheck {
  bool ad_stable = false;
  bool splits = false;
  std::string witness;
};

/// h must be a Cartan subalgebra: abelian and self-normalizing (checked,
/// NotCartan otherwise).  ad_stable = [h,q] in q; splits = h = (h n q) +
/// sigma(h n q).
RegularityCheck h_regularity_check(const ComplexStructure& q,
                                   const std::vector<Vec>& h_basis);

/// Basis of {W in q : [sigma(W), q] in q}, exact.
std::vector<Vec> sigma_normalizer(const ComplexStructure& q);

/// True iff sigma_normalizer(q) is contained in h and h-regularity fails;
/// reproduces the finite computation certifying non-regularity.
bool nonregularity_certificate(const ComplexStructure& q,
                               const std::vector<Vec>& h_basis);

/// Everything needed to work on the split form sl(2m-1, R).
struct SplitSlContext {
  int m = 0;
  int N = 0;
  std::shared_ptr<const LieAlgebra> alg;
  Involution theta;
  Involution tau;
  Involution sigma;
  std::shared_ptr<const SigmaConstants> constants;

  /// H~_k in the coroot normalization, k = 1..m-1.
  Vec h_tilde(int k) const;
  std::vector<Vec> h_tilde_basis() const;
  /// e_0 = e_{a_{m-1}} + sigma(e_{a_m}).
  Vec e_zero() const;
  Root gamma(int j) const { return Root{j, 2 * (m - j)}; }
};

SplitSlContext make_split_sl_context(int m);

/// The non-regular structure of the q built from
/// {H~_k} u {e_alpha : alpha != a_{m-1}} u {e_0}.
ComplexStructure build_nonregular_q(const SplitSlContext& ctx);

/// The h-regular structure spanned by {H~_k} and all positive root spaces.
ComplexStructure build_regular_morimoto(const SplitSlContext& ctx);

/// The regular family on sl(3,R) presented by its structure equations in the
/// frame (u, x, y, z) and conjugates; requires |lambda|^2 < 1.
struct Sl3Family {
  GaussRational lambda;
  std::shared_ptr<const LieAlgebra> alg;
  Involution bar;
  ComplexStructure q;
};

Sl3Family build_sl3_family(const GaussRational& lambda);

/// J as a real endomorphism of the sigma-fixed real form.
struct JOperator {
  std::vector<Vec> real_basis;   // basis of the real form, complex coords
  ExactMatrix mat;               // J in that basis
};

JOperator induced_J(const ComplexStructure& q);

/// Nijenhuis tensor of J on all real-basis pairs; must vanish.
bool nijenhuis_vanishes(const ComplexStructure& q, const JOperator& J);

/// True iff the +i eigenspace of the complexified J equals span(q).
bool j_eigenspace_matches(const ComplexStructure& q, const JOperator& J);

/// Span intersection helper (exact).
std::vector<Vec> subspace_intersection(const std::vector<Vec>& a,
                                       const std::vector<Vec>& b);

bool subspace_contains(const std::vector<Vec>& span, const Vec& v);

}  // namespace lieherm
