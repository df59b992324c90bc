#pragma once

#include <optional>
#include <set>

#include "lieherm/positivity.hpp"

namespace lieherm {

/// Hermitian metric in a (1,0)-coframe: positive-definite conjugate-symmetric
/// matrix of exact coefficients.
struct HermMetric {
  std::shared_ptr<const Coframe> cf;
  ExactMatrix h;

  static HermMetric identity(std::shared_ptr<const Coframe> cf);

  /// omega = i sum h_jk eta^j ^ conj(eta^k).
  ExtForm fundamental_form() const;
};

struct MetricReport {
  bool kahler = false;
  bool pluriclosed = false;
  bool balanced = false;
  bool gauduchon = false;
  bool astheno = false;
  // Residual forms of the failed predicates, serialized.
  std::string d_omega;
  std::string ddbar_omega;
  std::string d_omega_top1;
  std::string ddbar_omega_top1;
  std::string ddbar_omega_top2;
};

/// Flags by exact vanishing of d(omega), deldelbar(omega), d(omega^{n-1}),
/// deldelbar(omega^{n-1}), deldelbar(omega^{n-2}).  NotPositiveDefinite if h
/// is not an exact positive-definite hermitian matrix.
MetricReport metric_report(const HermMetric& H);

std::string to_json(const MetricReport& rep);

/// Residual sum_j [v_j, sigma(v_j)]; zero iff the metric making the frame
/// unitary is balanced.  NotAFrame unless the v_j span a valid q.
Vec balanced_frame_residual(const std::shared_ptr<const LieAlgebra>& alg,
                            const Involution& sigma,
                            const std::vector<Vec>& frame);

/// The corrected balanced frame on sl(2m-1,R): labeled so single correction
/// coefficients can be perturbed for sensitivity checks.
struct BalancedBasis {
  std::vector<Vec> frame;
  struct Correction {
    int frame_slot;           // index into `frame`
    Vec base;                 // uncorrected vector
    Vec added;                // correction direction
    GaussRational coeff;      // frame[slot] = base + coeff * added
    std::string description;
  };
  std::vector<Correction> corrections;
};

BalancedBasis balanced_basis_sl2m1(const SplitSlContext& ctx);

/// Rebuilds the frame with one correction coefficient shifted by delta.
std::vector<Vec> perturb_balanced_basis(const BalancedBasis& basis, int which,
                                        const GaussRational& delta);

/// Obstruction from an exact positive form: a semidefinite exact (1,1)-form
/// of rank k >= 1 obstructs p-Kahler structures for p in {n-k..n-1}.
struct ObstructionRecord {
  std::string generator;
  std::string kind;        // "d_beta" or "deldelbar_gamma"
  int sign = 0;            // +1 semi-positive, -1 semi-negative
  int rank = 0;
  std::set<int> obstructed_p;
  std::string target;      // "kahler" or "pluriclosed"
};

std::string to_json(const ObstructionRecord& rec);

/// d-beta scan over candidate invariant 1-forms.
std::vector<ObstructionRecord> obstruction_scan(
    const std::shared_ptr<const Coframe>& cf,
    const std::vector<std::pair<std::string, ExtForm>>& candidates);

/// deldelbar scan over candidate real (1,1)-forms (pluriclosed obstructions).
std::vector<ObstructionRecord> ddbar_obstruction_scan(
    const std::shared_ptr<const Coframe>& cf,
    const std::vector<std::pair<std::string, ExtForm>>& candidates);

/// Compact form su(N) (plus a central circle when N is even) with a regular
/// complex structure; the setting of the compact-group computations.
struct CompactFormContext {
  int N = 0;
  std::shared_ptr<const LieAlgebra> alg;
  Involution tau;                 // compact conjugation = real structure
  ComplexStructure q;
  std::shared_ptr<const Coframe> cf;
};

CompactFormContext make_compact_context(int N);

/// d of the invariant 1-form dual to a dominant weight, its Hermitian report
/// and the p-Kahler obstruction it generates.  Uses the regular dominant
/// weight rho = sum of fundamental weights so the rank equals the number of
/// positive roots (the highest root is singular for N >= 4).
struct DxiReport {
  ExtForm dxi;
  Form11Report herm;
  ObstructionRecord record;
};

DxiReport compact_dxi(const CompactFormContext& ctx);

/// Degenerate-h dd^c table: builds a J-invariant symmetric h supported on the
/// Cartan block with h(H_a0, H_b0) = 1, forms omega = h(J., .), and checks
/// that dd^c(omega)(E_a, E_-a, E_b, E_-b) = -2 h(H_a, H_b) with every other
/// component class vanishing.
struct DdcReport {
  bool pattern_holds = false;        // paired components match -2 h(H_a,H_b)
  bool others_vanish = false;        // all remaining basis quadruples
  std::vector<std::tuple<std::string, std::string, GaussRational>> table;
  bool obstructs_n_minus_2 = false;  // some paired component nonzero
};

DdcReport ddc_degenerate_form(const CompactFormContext& ctx);

/// Validation of the d^c convention: -dd^c(b1 ^ J b1) = (d b1)^2 + (d J b1)^2
/// for the Cartan-dual 1-forms on the compact group.  Exactly one convention
/// satisfies it; the engine's choice is asserted in the acceptance suite.
bool ddc_convention_check(const CompactFormContext& ctx);

/// sl(2,R) x R^{2n-3} for n in {2,3}: the product structure is Gauduchon and
/// pluriclosed but never Kahler.
struct Sl2ProductReport {
  int n = 0;
  MetricReport product_metric;
  bool kahler_feasible = true;       // exact feasibility of d omega = 0 > 0
  std::string infeasibility_reason;
  bool two_pluriclosed_witness = false;  // n = 3: ddbar(omega^2) = 0
};

Sl2ProductReport sl2_product_check(int n);

}  // namespace lieherm
