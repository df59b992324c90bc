#include "lieherm/complex_structure.hpp"

#include <sstream>

namespace lieherm {

namespace {

std::vector<Vec> echelonize(const std::vector<Vec>& span) {
  std::vector<int> keep = independent_subset(span);
  if (keep.size() == span.size()) return span;
  std::vector<Vec> out;
  for (int i : keep) out.push_back(span[i]);
  return out;
}

ExactMatrix basis_matrix(const std::vector<Vec>& basis) {
  return ExactMatrix::from_columns(basis);
}

std::string label_or_index(const std::vector<std::string>& labels, size_t i) {
  if (i < labels.size()) return labels[i];
  return "#" + std::to_string(i);
}

}  // namespace

std::string ComplexStructure::json() const {
  std::ostringstream os;
  os << "{\"labels\": [";
  for (int i = 0; i < n(); ++i) {
    if (i) os << ", ";
    os << '"' << (i < static_cast<int>(q_labels.size()) ? q_labels[i]
                                                        : std::to_string(i))
       << '"';
  }
  os << "], \"basis\": [";
  for (int j = 0; j < n(); ++j) {
    if (j) os << ", ";
    os << "[";
    for (int i = 0; i < alg->dim(); ++i) {
      if (i) os << ", ";
      os << "{\"re\": \"" << q_basis[j][i].re.str() << "\", \"im\": \""
         << q_basis[j][i].im.str() << "\"}";
    }
    os << "]";
  }
  os << "], \"algebra\": " << alg->json_structure() << "}";
  return os.str();
}

bool subspace_contains(const std::vector<Vec>& span, const Vec& v) {
  if (span.empty()) return is_zero(v);
  return in_column_span(basis_matrix(span), v);
}

std::vector<Vec> subspace_intersection(const std::vector<Vec>& a,
                                       const std::vector<Vec>& b) {
  std::vector<Vec> result;
  if (a.empty() || b.empty()) return result;
  size_t d = a[0].size();
  ExactMatrix m(static_cast<int>(d), static_cast<int>(a.size() + b.size()));
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < d; ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = a[j][i];
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t i = 0; i < d; ++i)
      m.at(static_cast<int>(i), static_cast<int>(a.size() + j)) = -b[j][i];
  for (const Vec& k : m.kernel_basis()) {
    Vec v(d);
    for (size_t j = 0; j < a.size(); ++j) v = v + k[j] * a[j];
    if (!is_zero(v)) result.push_back(std::move(v));
  }
  return echelonize(result);
}

SubalgebraCheck subalgebra_complement_check(
    const std::shared_ptr<const LieAlgebra>& alg, const Involution& sigma,
    const std::vector<Vec>& span, const std::vector<std::string>& labels) {
  SubalgebraCheck out;
  std::vector<Vec> basis = echelonize(span);
  ExactMatrix B = basis_matrix(basis);
  out.closed = true;
  for (size_t i = 0; i < basis.size() && out.closed; ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Vec br = alg->bracket(basis[i], basis[j]);
      if (!in_column_span(B, br)) {
        out.closed = false;
        std::ostringstream os;
        os << "[" << label_or_index(labels, i) << ", "
           << label_or_index(labels, j) << "] escapes the span";
        out.witness = os.str();
        break;
      }
    }
  std::vector<Vec> both = basis;
  for (const Vec& v : basis) both.push_back(sigma.apply(v));
  int r = basis_matrix(both).rank();
  out.complement =
      (2 * static_cast<int>(basis.size()) == alg->dim()) && r == alg->dim();
  if (!out.complement && out.witness.empty()) {
    std::ostringstream os;
    os << "rank(S + sigma S) = " << r << ", dim S = " << basis.size()
       << ", dim g = " << alg->dim();
    out.witness = os.str();
  }
  return out;
}

ComplexStructure make_complex_structure(std::shared_ptr<const LieAlgebra> alg,
                                        const Involution& sigma,
                                        std::vector<Vec> q_basis,
                                        std::vector<std::string> labels) {
  std::vector<Vec> basis = echelonize(q_basis);
  if (basis.size() != q_basis.size()) {
    q_basis = std::move(basis);
    labels.clear();
  }
  SubalgebraCheck chk = subalgebra_complement_check(alg, sigma, q_basis, labels);
  if (!chk.closed || !chk.complement)
    fail(ErrorKind::Internal, "invalid complex structure: " + chk.witness);
  ComplexStructure cs;
  cs.alg = std::move(alg);
  cs.sigma = sigma;
  cs.q_basis = std::move(q_basis);
  cs.q_labels = std::move(labels);
  return cs;
}

RegularityCheck h_regularity_check(const ComplexStructure& q,
                                   const std::vector<Vec>& h_basis) {
  const auto& alg = q.alg;
  int d = alg->dim();
  // Cartan checks: abelian ...
  for (size_t i = 0; i < h_basis.size(); ++i)
    for (size_t j = i + 1; j < h_basis.size(); ++j)
      if (!is_zero(alg->bracket(h_basis[i], h_basis[j])))
        fail(ErrorKind::NotCartan, "h is not abelian");
  // ... and self-normalizing: {X : [X, h] in h} has dimension dim h.
  std::vector<Vec> hspan(h_basis);
  {
    int rows = static_cast<int>(h_basis.size()) * d;
    ExactMatrix A(rows, d);
    // Extend h to a full basis, invert, and require the tail coordinates of
    // [X, h_i] to vanish.
    std::vector<Vec> full = hspan;
    for (int e = 0; e < d && static_cast<int>(full.size()) < d; ++e) {
      Vec v(d);
      v[e] = GaussRational(1);
      std::vector<Vec> tryv = full;
      tryv.push_back(v);
      if (static_cast<int>(independent_subset(tryv).size()) ==
          static_cast<int>(tryv.size()))
        full.push_back(std::move(v));
    }
    ExactMatrix F = basis_matrix(full);
    ExactMatrix Finv = F.inverse();
    int nh = static_cast<int>(hspan.size());
    for (int e = 0; e < d; ++e) {
      Vec xe(d);
      xe[e] = GaussRational(1);
      for (int i = 0; i < nh; ++i) {
        Vec br = alg->bracket(xe, hspan[i]);
        Vec coords = Finv * br;
        for (int t = nh; t < d; ++t)
          A.at(i * d + t, e) = coords[t];
      }
    }
    int normalizer_dim = d - A.rank();
    if (normalizer_dim != nh) fail(ErrorKind::NotCartan, "h is not self-normalizing");
  }

  RegularityCheck out;
  ExactMatrix Q = basis_matrix(q.q_basis);
  out.ad_stable = true;
  for (size_t i = 0; i < h_basis.size() && out.ad_stable; ++i)
    for (size_t j = 0; j < q.q_basis.size(); ++j) {
      Vec br = alg->bracket(h_basis[i], q.q_basis[j]);
      if (!in_column_span(Q, br)) {
        out.ad_stable = false;
        std::ostringstream os;
        os << "[h" << i + 1 << ", " << label_or_index(q.q_labels, j)
           << "] escapes q";
        out.witness = os.str();
        break;
      }
    }
  std::vector<Vec> hq = subspace_intersection(h_basis, q.q_basis);
  std::vector<Vec> parts = hq;
  for (const Vec& v : hq) parts.push_back(q.sigma.apply(v));
  int span_rank = parts.empty() ? 0 : basis_matrix(parts).rank();
  bool covers = span_rank == static_cast<int>(echelonize(h_basis).size());
  bool inside = true;
  for (const Vec& v : parts)
    if (!subspace_contains(h_basis, v)) {
      inside = false;
      break;
    }
  out.splits = covers && inside;
  return out;
}

std::vector<Vec> sigma_normalizer(const ComplexStructure& q) {
  const auto& alg = q.alg;
  int d = alg->dim();
  int n = q.n();
  std::vector<Vec> full = q.q_basis;
  for (const Vec& v : q.q_basis) full.push_back(q.sigma.apply(v));
  ExactMatrix Z = basis_matrix(full);
  ExactMatrix Zinv = Z.inverse();

  // Unknowns: w_t = u_t + i v_t over the q-basis.  Condition: for all basis
  // elements q_s of q, the sigma(q)-component of [sigma(W), q_s] vanishes.
  // sigma(W) = sum conj(w_t) sigma(q_t), so each tail coordinate gives a
  // C-antilinear equation in w; split into real unknowns.
  ExactMatrix A(2 * n * n, 2 * n);
  for (int t = 0; t < n; ++t) {
    Vec sq = q.sigma.apply(q.q_basis[t]);
    for (int s = 0; s < n; ++s) {
      Vec br = alg->bracket(sq, q.q_basis[s]);
      Vec coords = Zinv * br;
      for (int r = 0; r < n; ++r) {
        const GaussRational& w = coords[n + r];
        int row = 2 * (s * n + r);
        // sum_t (u_t - i v_t) * w = 0
        A.at(row, t) = GaussRational(w.re);
        A.at(row, n + t) = GaussRational(w.im);
        A.at(row + 1, t) = GaussRational(w.im);
        A.at(row + 1, n + t) = GaussRational(-w.re);
      }
    }
  }
  std::vector<Vec> result;
  for (const Vec& k : A.kernel_basis()) {
    Vec W(d);
    for (int t = 0; t < n; ++t) {
      GaussRational w(k[t].re, k[n + t].re);
      if (!w.is_zero()) W = W + w * q.q_basis[t];
    }
    if (!is_zero(W)) result.push_back(std::move(W));
  }
  return echelonize(result);
}

bool nonregularity_certificate(const ComplexStructure& q,
                               const std::vector<Vec>& h_basis) {
  std::vector<Vec> norm = sigma_normalizer(q);
  for (const Vec& w : norm)
    if (!subspace_contains(h_basis, w)) return false;
  RegularityCheck reg = h_regularity_check(q, h_basis);
  return !reg.ad_stable;
}

Vec SplitSlContext::h_tilde(int k) const {
  if (k < 1 || k > m - 1) fail(ErrorKind::Internal, "h_tilde index");
  int d = alg->dim();
  Vec v(d);
  if (k <= m - 3) {
    v[alg->h_index(k)] = GaussRational(1);
    v[alg->h_index(2 * m - 1 - k)] = GaussRational(-2);
  } else if (k == m - 2) {
    v[alg->h_index(m - 2)] = GaussRational(2);
    v[alg->h_index(m - 1)] = GaussRational(1);
  } else {
    v[alg->h_index(m - 1)] = GaussRational(1);
    v[alg->h_index(m)] = GaussRational(2);
  }
  return v;
}

std::vector<Vec> SplitSlContext::h_tilde_basis() const {
  std::vector<Vec> out;
  for (int k = 1; k <= m - 1; ++k) out.push_back(h_tilde(k));
  return out;
}

Vec SplitSlContext::e_zero() const {
  int d = alg->dim();
  Vec e(d);
  e[alg->pos_root_index(Root{m - 1, 1})] = GaussRational(1);
  Vec em(d);
  em[alg->pos_root_index(Root{m, 1})] = GaussRational(1);
  return e + sigma.apply(em);
}

SplitSlContext make_split_sl_context(int m) {
  if (m < 2) fail(ErrorKind::InvalidRank, "need m >= 2");
  SplitSlContext ctx;
  ctx.m = m;
  ctx.N = 2 * m - 1;
  ctx.alg = LieAlgebra::build_sl(ctx.N);
  ctx.theta = Involution::cartan_theta(ctx.alg);
  ctx.tau = Involution::compact_tau(ctx.alg);
  ctx.sigma = ctx.tau.compose(ctx.theta);
  ctx.constants = std::make_shared<SigmaConstants>(ctx.alg, ctx.sigma, m);
  // alpha_{m-1} vanishes on every H~_k; required by the whole construction.
  for (int k = 1; k <= m - 1; ++k)
    if (!ctx.alg->root_eval(Root{m - 1, 1}, ctx.h_tilde(k)).is_zero())
      fail(ErrorKind::ConstructionFailure, "alpha_{m-1} nonzero on h_tilde");
  return ctx;
}

ComplexStructure build_nonregular_q(const SplitSlContext& ctx) {
  const auto& alg = ctx.alg;
  int d = alg->dim();
  std::vector<Vec> basis;
  std::vector<std::string> labels;
  for (int k = 1; k <= ctx.m - 1; ++k) {
    basis.push_back(ctx.h_tilde(k));
    labels.push_back("Ht" + std::to_string(k));
  }
  for (const Root& r : alg->roots().positive_roots) {
    if (r == Root{ctx.m - 1, 1}) continue;
    Vec v(d);
    v[alg->pos_root_index(r)] = GaussRational(1);
    basis.push_back(std::move(v));
    labels.push_back("e_" + r.str());
  }
  basis.push_back(ctx.e_zero());
  labels.push_back("e0");
  return make_complex_structure(alg, ctx.sigma, std::move(basis),
                                std::move(labels));
}

ComplexStructure build_regular_morimoto(const SplitSlContext& ctx) {
  const auto& alg = ctx.alg;
  int d = alg->dim();
  std::vector<Vec> basis;
  std::vector<std::string> labels;
  for (int k = 1; k <= ctx.m - 1; ++k) {
    basis.push_back(ctx.h_tilde(k));
    labels.push_back("Ht" + std::to_string(k));
  }
  for (const Root& r : alg->roots().positive_roots) {
    Vec v(d);
    v[alg->pos_root_index(r)] = GaussRational(1);
    basis.push_back(std::move(v));
    labels.push_back("e_" + r.str());
  }
  return make_complex_structure(alg, ctx.sigma, std::move(basis),
                                std::move(labels));
}

Sl3Family build_sl3_family(const GaussRational& lambda) {
  if (!(lambda.norm() < Rational(1)))
    fail(ErrorKind::InvalidParameter, "need |lambda|^2 < 1");
  GaussRational lb = lambda.conj();
  GaussRational D(Rational(1) - lambda.norm());
  GaussRational one(1), two(2);

  std::vector<std::string> labels = {"u", "x", "y", "z", "ub", "xb", "yb", "zb"};
  std::vector<std::vector<SparseVec>> t(8, std::vector<SparseVec>(8));
  auto set = [&](int i, int j, SparseVec v) { t[i][j] = std::move(v); };
  // Complex structure equations of the family, plus sigma-conjugates.
  set(0, 1, {{1, two - lambda}});
  set(0, 2, {{2, two * lambda - one}});
  set(0, 3, {{3, lambda + one}});
  set(0, 5, {{5, one - two * lambda}});
  set(0, 6, {{6, lambda - two}});
  set(0, 7, {{7, -(lambda + one)}});
  set(1, 2, {{3, one}});
  set(1, 4, {{1, two * lb - one}});
  set(1, 6, {{0, one / D}, {4, lambda / D}});
  set(1, 7, {{5, -one}});
  set(2, 4, {{2, two - lb}});
  set(2, 5, {{0, -lb / D}, {4, -one / D}});
  set(2, 7, {{6, one}});
  set(3, 4, {{3, lb + one}});
  set(3, 5, {{1, one}});
  set(3, 6, {{2, -one}});
  set(3, 7, {{0, (one - lb) / D}, {4, -(one - lambda) / D}});
  set(4, 5, {{5, two - lb}});
  set(4, 6, {{6, two * lb - one}});
  set(4, 7, {{7, lb + one}});
  set(5, 6, {{7, one}});

  Sl3Family fam;
  fam.lambda = lambda;
  fam.alg = LieAlgebra::from_table(labels, t);

  ExactMatrix S(8, 8);
  for (int i = 0; i < 4; ++i) {
    S.at(i + 4, i) = GaussRational(1);
    S.at(i, i + 4) = GaussRational(1);
  }
  fam.bar = Involution(fam.alg, std::move(S), true);
  if (!fam.bar.is_involutive() || !fam.bar.is_bracket_compatible())
    fail(ErrorKind::Internal, "family table breaks conjugation symmetry");
  std::vector<Vec> q;
  for (int i = 0; i < 4; ++i) {
    Vec v(8);
    v[i] = GaussRational(1);
    q.push_back(std::move(v));
  }
  fam.q = make_complex_structure(fam.alg, fam.bar, std::move(q),
                                 {"u", "x", "y", "z"});
  return fam;
}

JOperator induced_J(const ComplexStructure& q) {
  const auto& alg = q.alg;
  int d = alg->dim();
  int n = q.n();
  std::vector<Vec> full = q.q_basis;
  for (const Vec& v : q.q_basis) full.push_back(q.sigma.apply(v));
  ExactMatrix Z = basis_matrix(full);
  ExactMatrix Zinv = Z.inverse();
  auto apply_J = [&](const Vec& v) {
    // J(v) = i W + sigma(i W) for v = W + sigma(W); equals 2i P_q(v) - i v.
    Vec coords = Zinv * v;
    Vec W(d);
    for (int t = 0; t < n; ++t)
      if (!coords[t].is_zero()) W = W + coords[t] * q.q_basis[t];
    return GaussRational::i() * (GaussRational(2) * W - v);
  };

  RealFormInfo rf = real_form(q.sigma);
  JOperator J;
  J.real_basis = rf.basis;
  // Express J(r_b) over the real basis with real coefficients.
  int nb = static_cast<int>(rf.basis.size());
  ExactMatrix A(2 * d, nb);
  for (int b = 0; b < nb; ++b)
    for (int i = 0; i < d; ++i) {
      A.at(i, b) = GaussRational(rf.basis[b][i].re);
      A.at(d + i, b) = GaussRational(rf.basis[b][i].im);
    }
  J.mat = ExactMatrix(nb, nb);
  for (int b = 0; b < nb; ++b) {
    Vec img = apply_J(rf.basis[b]);
    Vec rhs(2 * d);
    for (int i = 0; i < d; ++i) {
      rhs[i] = GaussRational(img[i].re);
      rhs[d + i] = GaussRational(img[i].im);
    }
    LinearSolution sol = solve_linear(A, rhs);
    if (!sol.consistent)
      fail(ErrorKind::Internal, "J image escapes the real form");
    for (int r = 0; r < nb; ++r) J.mat.at(r, b) = sol.particular[r];
  }
  return J;
}

bool nijenhuis_vanishes(const ComplexStructure& q, const JOperator& J) {
  const auto& alg = q.alg;
  int d = alg->dim();
  int n = q.n();
  std::vector<Vec> full = q.q_basis;
  for (const Vec& v : q.q_basis) full.push_back(q.sigma.apply(v));
  ExactMatrix Zinv = basis_matrix(full).inverse();
  auto apply_J = [&](const Vec& v) {
    Vec coords = Zinv * v;
    Vec W(d);
    for (int t = 0; t < n; ++t)
      if (!coords[t].is_zero()) W = W + coords[t] * q.q_basis[t];
    return GaussRational::i() * (GaussRational(2) * W - v);
  };
  const auto& rb = J.real_basis;
  for (size_t i = 0; i < rb.size(); ++i)
    for (size_t j = i + 1; j < rb.size(); ++j) {
      Vec jx = apply_J(rb[i]);
      Vec jy = apply_J(rb[j]);
      Vec nij = alg->bracket(jx, jy) - alg->bracket(rb[i], rb[j]) -
                apply_J(alg->bracket(jx, rb[j])) -
                apply_J(alg->bracket(rb[i], jy));
      if (!is_zero(nij)) return false;
    }
  return true;
}

bool j_eigenspace_matches(const ComplexStructure& q, const JOperator& J) {
  int nb = static_cast<int>(J.real_basis.size());
  ExactMatrix shifted = J.mat - GaussRational::i() * ExactMatrix::identity(nb);
  std::vector<Vec> eig;
  for (const Vec& k : shifted.kernel_basis()) {
    Vec v(q.alg->dim());
    for (int b = 0; b < nb; ++b)
      if (!k[b].is_zero()) v = v + k[b] * J.real_basis[b];
    eig.push_back(std::move(v));
  }
  if (eig.size() != q.q_basis.size()) return false;
  for (const Vec& v : eig)
    if (!subspace_contains(q.q_basis, v)) return false;
  return true;
}

}  // namespace lieherm
