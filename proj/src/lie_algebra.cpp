#include "lieherm/lie_algebra.hpp"

#include <map>
#include <sstream>

namespace lieherm {

Vec densify(const SparseVec& s, int dim) {
  Vec v(dim);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

SparseVec sparsify(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

namespace {

SparseVec neg(const SparseVec& s) {
  SparseVec r = s;
  for (auto& [i, c] : r) c = -c;
  return r;
}

}  // namespace

const RootSystem& LieAlgebra::roots() const {
  if (!roots_) fail(ErrorKind::Internal, "algebra has no root system");
  return *roots_;
}

int LieAlgebra::h_index(int j) const {
  if (j < 1 || j > num_h()) fail(ErrorKind::Internal, "bad h index");
  return j - 1;
}

int LieAlgebra::pos_root_index(const Root& r) const {
  return num_h() + roots().index_of(r);
}

int LieAlgebra::neg_root_index(const Root& r) const {
  return num_h() + roots().num_positive() + roots().index_of(r);
}

int LieAlgebra::center_index(int c) const {
  if (c < 0 || c >= center_) fail(ErrorKind::Internal, "bad center index");
  return num_h() + 2 * roots().num_positive() + c;
}

bool LieAlgebra::root_of_index(int i, Root* r, bool* negative) const {
  if (N_ == 0) return false;
  int p = roots().num_positive();
  if (i < num_h() || i >= num_h() + 2 * p) return false;
  int idx = i - num_h();
  *negative = idx >= p;
  *r = roots().positive_roots[idx % p];
  return true;
}

const SparseVec& LieAlgebra::bracket_basis(int i, int j) const {
  return brackets_[i][j];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    fail(ErrorKind::DimensionMismatch, "bracket operand size");
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& [k, c] : brackets_[i][j]) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

std::vector<Vec> LieAlgebra::cartan_basis() const {
  std::vector<Vec> h;
  for (int j = 1; j <= num_h(); ++j) {
    Vec v(dim_);
    v[h_index(j)] = GaussRational(1);
    h.push_back(std::move(v));
  }
  return h;
}

GaussRational LieAlgebra::root_eval(const Root& alpha, const Vec& H,
                                    bool negative) const {
  // alpha(h_i) for the interval [start, end]: the E_{a,b} weight rule.
  GaussRational val;
  int a = alpha.row(), b = alpha.col();
  for (int i = 1; i <= num_h(); ++i) {
    if (H[h_index(i)].is_zero()) continue;
    int w = (i == a) - (i + 1 == a) - (i == b) + (i + 1 == b);
    if (w != 0) val += GaussRational(w) * H[h_index(i)];
  }
  return negative ? -val : val;
}

const ExactMatrix& LieAlgebra::killing() const {
  if (!killing_) {
    ExactMatrix B(dim_, dim_);
    // B_ij = sum_l sum_k c_{il}^k c_{jk}^l
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        GaussRational s;
        for (int l = 0; l < dim_; ++l)
          for (const auto& [k, c1] : brackets_[i][l])
            for (const auto& [l2, c2] : brackets_[j][k])
              if (l2 == l) s += c1 * c2;
        B.at(i, j) = s;
        B.at(j, i) = s;
      }
    killing_ = std::move(B);
  }
  return *killing_;
}

GaussRational LieAlgebra::killing_pair(const Vec& x, const Vec& y) const {
  const ExactMatrix& B = killing();
  GaussRational s;
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!y[j].is_zero() && !B.at(i, j).is_zero()) s += x[i] * B.at(i, j) * y[j];
  }
  return s;
}

GaussRational LieAlgebra::killing_norm_pair(const Vec& x, const Vec& y) const {
  if (N_ == 0) fail(ErrorKind::Internal, "normalized form needs type A");
  return killing_pair(x, y) / GaussRational(2 * N_);
}

Vec LieAlgebra::killing_dual(const Root& alpha) const {
  // Solve B(h_i, H) = alpha(h_i) over the h-block.
  int r = num_h();
  const ExactMatrix& B = killing();
  ExactMatrix G(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G.at(i, j) = B.at(i, j);
  Vec rhs(r);
  for (int i = 1; i <= r; ++i) {
    Vec hi(dim_);
    hi[h_index(i)] = GaussRational(1);
    rhs[i - 1] = root_eval(alpha, hi);
  }
  LinearSolution sol = solve_linear(G, rhs);
  if (!sol.consistent || !sol.kernel.empty())
    fail(ErrorKind::DegenerateKilling, "killing dual not unique");
  Vec H(dim_);
  for (int i = 0; i < r; ++i) H[h_index(i + 1)] = sol.particular[i];
  return H;
}

Vec LieAlgebra::coroot(const Root& alpha) const {
  Vec H(dim_);
  for (int s = alpha.start; s <= alpha.end(); ++s)
    H[h_index(s)] = GaussRational(1);
  return H;
}

void LieAlgebra::require_semisimple_part() const {
  int d = dim_ - center_;
  const ExactMatrix& B = killing();
  ExactMatrix S(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) S.at(i, j) = B.at(i, j);
  if (S.det().is_zero())
    fail(ErrorKind::DegenerateKilling, "killing form degenerate");
}

bool LieAlgebra::verify_jacobi() const {
  Vec acc(dim_);
  auto add_bracket_sparse = [&](int i, const SparseVec& s, const GaussRational& f) {
    for (const auto& [j, c] : s)
      for (const auto& [k, c2] : brackets_[i][j]) acc[k] += f * c * c2;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        for (auto& x : acc) x = GaussRational(0);
        add_bracket_sparse(i, brackets_[j][k], GaussRational(1));
        add_bracket_sparse(j, brackets_[k][i], GaussRational(1));
        add_bracket_sparse(k, brackets_[i][j], GaussRational(1));
        for (const auto& x : acc)
          if (!x.is_zero()) return false;
      }
  return true;
}

void LieAlgebra::finalize() {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < i; ++j) brackets_[i][j] = neg(brackets_[j][i]);
  for (int i = 0; i < dim_; ++i)
    if (!brackets_[i][i].empty())
      fail(ErrorKind::Internal, "nonzero [X,X] in structure table");
  if (!verify_jacobi())
    fail(ErrorKind::Internal, "structure constants violate the Jacobi identity");
}

std::shared_ptr<const LieAlgebra> LieAlgebra::build_sl(int N, int center) {
  if (N < 2) fail(ErrorKind::InvalidRank, "sl(N) needs N >= 2");
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->N_ = N;
  alg->center_ = center;
  alg->roots_ = root_data(N);
  int P = alg->roots_->num_positive();
  alg->dim_ = (N - 1) + 2 * P + center;

  for (int j = 1; j <= N - 1; ++j) alg->labels_.push_back("h" + std::to_string(j));
  auto unit_label = [](int a, int b) {
    return "e" + std::to_string(a) + "," + std::to_string(b);
  };
  for (const Root& r : alg->roots_->positive_roots)
    alg->labels_.push_back(unit_label(r.row(), r.col()));
  for (const Root& r : alg->roots_->positive_roots)
    alg->labels_.push_back(unit_label(r.col(), r.row()));
  for (int c = 0; c < center; ++c)
    alg->labels_.push_back("c" + std::to_string(c + 1));

  // Index of E_{a,b} (a != b).
  auto unit_index = [&](int a, int b) {
    Root r = a < b ? Root{a, b - a} : Root{b, a - b};
    return a < b ? alg->pos_root_index(r) : alg->neg_root_index(r);
  };
  // Matrix pair of a basis index; (0,0) for h/center indices.
  auto pair_of = [&](int i, int* a, int* b) {
    Root r;
    bool negv;
    if (!alg->root_of_index(i, &r, &negv)) return false;
    *a = negv ? r.col() : r.row();
    *b = negv ? r.row() : r.col();
    return true;
  };

  alg->brackets_.assign(alg->dim_, std::vector<SparseVec>(alg->dim_));
  Vec acc(alg->dim_);
  auto add_unit = [&](int a, int b, const GaussRational& c) {
    // E_{a,b}; for a == b the caller handles the diagonal combination.
    acc[unit_index(a, b)] += c;
  };
  auto add_diag = [&](int a, int b, const GaussRational& c) {
    // c * (E_aa - E_bb) as a sum of coroots.
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    GaussRational s = (a < b) ? c : -c;
    for (int t = lo; t <= hi - 1; ++t) acc[alg->h_index(t)] += s;
  };

  for (int i = 0; i < alg->dim_; ++i) {
    for (int j = i + 1; j < alg->dim_; ++j) {
      for (auto& x : acc) x = GaussRational(0);
      int a, b, c, d;
      bool i_unit = pair_of(i, &a, &b);
      bool j_unit = pair_of(j, &c, &d);
      bool i_h = i < alg->num_h();
      if (i_h && j_unit) {
        // [h_t, E_cd] = (d_{t,c} - d_{t+1,c} - d_{t,d} + d_{t+1,d}) E_cd
        int t = i + 1;
        int w = (t == c) - (t + 1 == c) - (t == d) + (t + 1 == d);
        if (w != 0) add_unit(c, d, GaussRational(w));
      } else if (i_unit && j_unit) {
        // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
        if (b == c && a == d) {
          add_diag(a, b, GaussRational(1));
        } else {
          if (b == c) add_unit(a, d, GaussRational(1));
          if (d == a) add_unit(c, b, GaussRational(-1));
        }
      }
      // h-h, center-anything: zero.
      alg->brackets_[i][j] = sparsify(acc);
    }
  }
  alg->finalize();
  return alg;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::from_table(
    std::vector<std::string> labels,
    const std::vector<std::vector<SparseVec>>& upper_table) {
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->dim_ = static_cast<int>(labels.size());
  alg->labels_ = std::move(labels);
  alg->brackets_.assign(alg->dim_, std::vector<SparseVec>(alg->dim_));
  for (int i = 0; i < alg->dim_; ++i)
    for (int j = i + 1; j < alg->dim_; ++j)
      if (i < static_cast<int>(upper_table.size()) &&
          j < static_cast<int>(upper_table[i].size()))
        alg->brackets_[i][j] = upper_table[i][j];
  alg->finalize();
  return alg;
}

std::string LieAlgebra::json_structure() const {
  std::ostringstream os;
  os << "{\"dim\": " << dim_ << ", \"labels\": [";
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ", ";
    os << '"' << labels_[i] << '"';
  }
  os << "], \"brackets\": [";
  bool first = true;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (const auto& [k, c] : brackets_[i][j]) {
        if (!first) os << ", ";
        first = false;
        os << "{\"i\": " << i << ", \"j\": " << j << ", \"k\": " << k
           << ", \"re\": \"" << c.re.str() << "\", \"im\": \"" << c.im.str()
           << "\"}";
      }
  os << "]}";
  return os.str();
}

}  // namespace lieherm
