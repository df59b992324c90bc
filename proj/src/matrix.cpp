#include "lieherm/matrix.hpp"

#include <algorithm>

namespace lieherm {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vec add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vec sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const GaussRational& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec conj(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
  return r;
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return ExactMatrix(0, 0);
  ExactMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (cols[j].size() != static_cast<size_t>(m.rows()))
      fail(ErrorKind::DimensionMismatch, "from_columns ragged input");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return ExactMatrix(0, 0);
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != static_cast<size_t>(m.cols()))
      fail(ErrorKind::DimensionMismatch, "from_rows ragged input");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec ExactMatrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec ExactMatrix::col(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix product");
  ExactMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Vec ExactMatrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix sub");
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix add");
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

ExactMatrix ExactMatrix::conj_entries() const {
  ExactMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).conj();
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::rref(std::vector<int>* pivot_cols) const {
  ExactMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int piv = -1;
    for (int i = lead; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    GaussRational inv = GaussRational(1) / m.at(lead, c);
    for (int j = 0; j < cols_; ++j) m.at(lead, j) = inv * m.at(lead, j);
    for (int i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, c).is_zero()) continue;
      GaussRational f = m.at(i, c);
      for (int j = 0; j < cols_; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(lead, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++lead;
  }
  return m;
}

int ExactMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

std::vector<Vec> ExactMatrix::kernel_basis() const {
  std::vector<int> piv;
  ExactMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = GaussRational(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "inverse of non-square");
  ExactMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = GaussRational(1);
  }
  std::vector<int> piv;
  ExactMatrix r = aug.rref(&piv);
  if (static_cast<int>(piv.size()) != rows_)
    fail(ErrorKind::DegenerateKilling, "singular matrix has no inverse");
  ExactMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

GaussRational ExactMatrix::det() const {
  if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "det of non-square");
  ExactMatrix m = *this;
  GaussRational d(1);
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int i = c; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return GaussRational(0);
    if (piv != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d = d * m.at(c, c);
    GaussRational inv = GaussRational(1) / m.at(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      GaussRational f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
    }
  }
  return d;
}

ExactMatrix operator*(const GaussRational& c, const ExactMatrix& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
  return r;
}

LinearSolution solve_linear(const ExactMatrix& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows())
    fail(ErrorKind::DimensionMismatch, "solve_linear shape");
  ExactMatrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<int> piv;
  ExactMatrix r = aug.rref(&piv);
  LinearSolution sol;
  for (int c : piv)
    if (c == A.cols()) return sol;  // inconsistent
  sol.consistent = true;
  sol.particular.assign(A.cols(), GaussRational(0));
  for (size_t i = 0; i < piv.size(); ++i)
    sol.particular[piv[i]] = r.at(static_cast<int>(i), A.cols());
  sol.kernel = A.kernel_basis();
  return sol;
}

bool in_column_span(const ExactMatrix& M, const Vec& v) {
  return solve_linear(M, v).consistent;
}

std::vector<int> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<int> chosen;
  if (vectors.empty()) return chosen;
  std::vector<Vec> rows;  // echelonized span so far
  for (int idx = 0; idx < static_cast<int>(vectors.size()); ++idx) {
    Vec v = vectors[idx];
    for (const Vec& r : rows) {
      int lead = -1;
      for (size_t j = 0; j < r.size(); ++j)
        if (!r[j].is_zero()) {
          lead = static_cast<int>(j);
          break;
        }
      if (lead >= 0 && !v[lead].is_zero()) {
        GaussRational f = v[lead] / r[lead];
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * r[j];
      }
    }
    if (!is_zero(v)) {
      rows.push_back(std::move(v));
      chosen.push_back(idx);
    }
  }
  return chosen;
}

std::vector<int> independent_subset_real(const std::vector<Vec>& vectors) {
  std::vector<Vec> split;
  split.reserve(vectors.size());
  for (const Vec& v : vectors) {
    Vec w(2 * v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      w[2 * i] = GaussRational(v[i].re);
      w[2 * i + 1] = GaussRational(v[i].im);
    }
    split.push_back(std::move(w));
  }
  return independent_subset(split);
}

int real_rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  size_t n = vectors[0].size();
  ExactMatrix m(static_cast<int>(2 * n), static_cast<int>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j)
    for (size_t i = 0; i < n; ++i) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = GaussRational(vectors[j][i].re);
      m.at(static_cast<int>(n + i), static_cast<int>(j)) =
          GaussRational(vectors[j][i].im);
    }
  return m.rank();
}

Signature hermitian_signature(const ExactMatrix& h) {
  if (h.rows() != h.cols()) fail(ErrorKind::DimensionMismatch, "signature");
  if (!(h.conj_transpose() == h))
    fail(ErrorKind::NotRealForm, "signature of non-hermitian matrix");
  ExactMatrix m = h;
  int n = m.rows();
  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      // Try to bring a nonzero diagonal entry to position k.
      int swap_with = -1;
      for (int l = k + 1; l < n; ++l)
        if (!m.at(l, l).is_zero()) {
          swap_with = l;
          break;
        }
      if (swap_with >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_with, j));
        for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, swap_with));
      } else {
        // All trailing diagonal entries vanish; synthesize one from an
        // off-diagonal entry via x = e_i + c e_j, x* H x = 2 Re(c H_ij).
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero()) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          sig.zero += n - k;
          break;
        }
        GaussRational c = m.at(oi, oj).re.is_zero() ? GaussRational::i()
                                                    : GaussRational(1);
        // Congruence: col oi += c * col oj, then row oi += conj(c) * row oj.
        for (int i = 0; i < n; ++i) m.at(i, oi) += c * m.at(i, oj);
        for (int j = 0; j < n; ++j) m.at(oi, j) += c.conj() * m.at(oj, j);
        if (oi != k) {
          for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(oi, j));
          for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, oi));
        }
      }
    }
    const GaussRational& d = m.at(k, k);
    if (d.is_zero()) {
      sig.zero += 1;
      continue;
    }
    if (!d.im.is_zero()) fail(ErrorKind::Internal, "non-real hermitian diagonal");
    if (d.re.sign() > 0)
      sig.pos += 1;
    else
      sig.neg += 1;
    GaussRational inv = GaussRational(1) / d;
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      GaussRational f = m.at(i, k) * inv;
      // row i -= f * row k; col i -= conj(f) * col k (keeps hermitian form).
      for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
      for (int j = 0; j < n; ++j) m.at(j, i) = m.at(j, i) - f.conj() * m.at(j, k);
    }
  }
  return sig;
}

}  // namespace lieherm
