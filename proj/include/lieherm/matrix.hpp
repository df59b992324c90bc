#pragma once

#include <vector>

#include "lieherm/rational.hpp"

namespace lieherm {

using Vec = std::vector<GaussRational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const GaussRational& c, const Vec& v);
bool is_zero(const Vec& v);
Vec conj(const Vec& v);

/// Dense matrix over Q(i).  Row-major.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ExactMatrix identity(int n);
  static ExactMatrix from_columns(const std::vector<Vec>& cols);
  static ExactMatrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const GaussRational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Vec row(int i) const;
  Vec col(int j) const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  Vec operator*(const Vec& v) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;

  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  ExactMatrix conj_entries() const;
  bool is_zero() const;

  /// Reduced row echelon form, deterministic pivoting: scan columns left to
  /// right, pivot on the first row (top to bottom) with a nonzero entry.
  ExactMatrix rref(std::vector<int>* pivot_cols = nullptr) const;

  int rank() const;

  /// Kernel basis in reduced echelon convention (one vector per free column,
  /// free coordinate set to 1), deterministic.
  std::vector<Vec> kernel_basis() const;

  ExactMatrix inverse() const;

  GaussRational det() const;

 private:
  int rows_;
  int cols_;
  std::vector<GaussRational> a_;
};

ExactMatrix operator*(const GaussRational& c, const ExactMatrix& m);

struct LinearSolution {
  bool consistent = false;
  Vec particular;            // one solution of A x = b (empty if inconsistent)
  std::vector<Vec> kernel;   // basis of ker A
};

/// Exact solution space of A x = b.
LinearSolution solve_linear(const ExactMatrix& A, const Vec& b);

/// Column span membership: is v in the span of the columns of M?
bool in_column_span(const ExactMatrix& M, const Vec& v);

/// Extracts indices of a maximal linearly independent subset of the given
/// vectors (as columns), in input order.
std::vector<int> independent_subset(const std::vector<Vec>& vectors);

/// Same, but with independence over the reals (re/im coordinate split).
std::vector<int> independent_subset_real(const std::vector<Vec>& vectors);

/// Rank of the set of vectors viewed as real vectors (re/im split), used for
/// real-linear independence questions.
int real_rank(const std::vector<Vec>& vectors);

/// Signature (pos, neg, zero) of an exact Hermitian matrix, computed by
/// congruence without square roots.
struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

Signature hermitian_signature(const ExactMatrix& h);

}  // namespace lieherm
