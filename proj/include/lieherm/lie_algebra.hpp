#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieherm/matrix.hpp"
#include "lieherm/root_system.hpp"

namespace lieherm {

/// Sparse vector in the basis of a LieAlgebra: (index, coefficient) pairs,
/// sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<int, GaussRational>>;

Vec densify(const SparseVec& s, int dim);
SparseVec sparsify(const Vec& v);

/// Finite-dimensional Lie algebra given by a labeled basis and an exact
/// structure-constant tensor.  For sl(N) the basis is the Chevalley one:
/// coroots h_1..h_{N-1}, then e_alpha for positive roots ordered by (len,
/// start), then e_{-alpha} in the same order, then any central generators.
class LieAlgebra {
 public:
  static std::shared_ptr<const LieAlgebra> build_sl(int N, int center = 0);

  /// Generic algebra from an explicit table.  brackets[i][j] needs only i<j;
  /// antisymmetry is filled in and Jacobi verified.
  static std::shared_ptr<const LieAlgebra> from_table(
      std::vector<std::string> labels,
      const std::vector<std::vector<SparseVec>>& upper_table);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Type-A data; N() == 0 for generic algebras.
  int N() const { return N_; }
  int center_count() const { return center_; }
  const RootSystem& roots() const;
  int num_h() const { return N_ > 0 ? N_ - 1 : 0; }

  int h_index(int j) const;            // h_j, 1-based
  int pos_root_index(const Root& r) const;
  int neg_root_index(const Root& r) const;
  int center_index(int c) const;       // 0-based central generator

  const SparseVec& bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Is index i a root-vector index, and which signed root is it?
  bool root_of_index(int i, Root* r, bool* negative) const;

  /// Cartan-subalgebra basis vectors h_1..h_{N-1} as dense vectors.
  std::vector<Vec> cartan_basis() const;

  /// Value alpha(H) for H given as a dense vector supported on the h-block.
  GaussRational root_eval(const Root& alpha, const Vec& H, bool negative = false) const;

  /// Killing form B(X,Y) = trace(ad X . ad Y), computed from the structure
  /// tensor.  Cached.
  const ExactMatrix& killing() const;
  GaussRational killing_pair(const Vec& x, const Vec& y) const;

  /// Killing form divided by 2N (type A only): the normalization in which
  /// B(H_alpha, H_alpha) = 2 for every root and the dual of alpha is the
  /// coroot.  Used by all the split-form frame constructions.
  GaussRational killing_norm_pair(const Vec& x, const Vec& y) const;

  /// B-dual H_alpha of a positive root: B(H, H_alpha) = alpha(H).  With the
  /// honest Killing form this is coroot/(2N); `coroot` returns the sum of
  /// simple coroots over the root's support (the dual for killing_norm_pair).
  Vec killing_dual(const Root& alpha) const;
  Vec coroot(const Root& alpha) const;

  /// Throws DegenerateKilling unless the Killing matrix restricted to the
  /// non-central block is nonsingular.
  void require_semisimple_part() const;

  bool verify_jacobi() const;

  std::string json_structure() const;

 private:
  LieAlgebra() = default;
  void finalize();  // antisymmetry + jacobi verification

  int dim_ = 0;
  int N_ = 0;
  int center_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> brackets_;  // full dim x dim table
  std::optional<RootSystem> roots_;
  mutable std::optional<ExactMatrix> killing_;
};

}  // namespace lieherm
