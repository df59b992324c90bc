#include "lieherm/involution.hpp"

#include <sstream>

namespace lieherm {

Vec Involution::apply(const Vec& v) const {
  return antilinear_ ? mat_ * lieherm::conj(v) : mat_ * v;
}

Involution Involution::compose(const Involution& other) const {
  if (alg_ != other.alg_) fail(ErrorKind::DimensionMismatch, "compose mismatch");
  // (this . other)(v) = this(other(v)); an antilinear outer map conjugates the
  // inner matrix.
  ExactMatrix m = antilinear_ ? mat_ * other.mat_.conj_entries()
                              : mat_ * other.mat_;
  return Involution(alg_, std::move(m), antilinear_ != other.antilinear_);
}

bool Involution::is_involutive() const {
  int d = alg_->dim();
  for (int j = 0; j < d; ++j) {
    Vec v(d);
    v[j] = GaussRational(1);
    Vec w = apply(apply(v));
    w[j] -= GaussRational(1);
    if (!is_zero(w)) return false;
  }
  return true;
}

bool Involution::is_bracket_compatible() const {
  int d = alg_->dim();
  for (int i = 0; i < d; ++i) {
    Vec vi(d);
    vi[i] = GaussRational(1);
    Vec fi = apply(vi);
    for (int j = i + 1; j < d; ++j) {
      Vec vj(d);
      vj[j] = GaussRational(1);
      Vec lhs = apply(densify(alg_->bracket_basis(i, j), d));
      Vec rhs = alg_->bracket(fi, apply(vj));
      if (!is_zero(lhs - rhs)) return false;
    }
  }
  return true;
}

bool Involution::commutes_with(const Involution& other) const {
  ExactMatrix a = compose(other).matrix();
  ExactMatrix b = other.compose(*this).matrix();
  return a == b;
}

Involution Involution::cartan_theta(std::shared_ptr<const LieAlgebra> alg) {
  int N = alg->N();
  if (N < 2) fail(ErrorKind::Internal, "theta needs type A");
  int d = alg->dim();
  ExactMatrix M(d, d);
  auto set_image = [&](int src, const Vec& img) {
    for (int i = 0; i < d; ++i) M.at(i, src) = img[i];
  };
  auto unit_vec = [&](int idx) {
    Vec v(d);
    v[idx] = GaussRational(1);
    return v;
  };
  std::vector<Vec> pos_img(alg->roots().num_positive());
  std::vector<Vec> neg_img(alg->roots().num_positive());

  for (int j = 1; j <= N - 1; ++j)
    set_image(alg->h_index(j), unit_vec(alg->h_index(N - j)));
  // Simple root vectors map with coefficient +1; composite images follow by
  // propagation through e_{[j,j+k-1]} = [e_{a_j}, e_{[j+1,j+k-1]}] and
  // e_{-[j,j+k-1]} = -[e_{-a_j}, e_{-[j+1,j+k-1]}].
  const auto& rs = alg->roots();
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    const Root& r = rs.positive_roots[idx];
    if (r.len == 1) {
      Root flip{N - r.start, 1};
      pos_img[idx] = unit_vec(alg->pos_root_index(flip));
      neg_img[idx] = unit_vec(alg->neg_root_index(flip));
    } else {
      Root head{r.start, 1};
      Root tail{r.start + 1, r.len - 1};
      const Vec& ph = pos_img[rs.index_of(head)];
      const Vec& pt = pos_img[rs.index_of(tail)];
      pos_img[idx] = alg->bracket(ph, pt);
      const Vec& nh = neg_img[rs.index_of(head)];
      const Vec& nt = neg_img[rs.index_of(tail)];
      neg_img[idx] = GaussRational(-1) * alg->bracket(nh, nt);
    }
    set_image(alg->pos_root_index(r), pos_img[idx]);
    set_image(alg->neg_root_index(r), neg_img[idx]);
  }
  for (int c = 0; c < alg->center_count(); ++c)
    set_image(alg->center_index(c), unit_vec(alg->center_index(c)));

  Involution theta(std::move(alg), std::move(M), false);
  if (!theta.is_involutive() || !theta.is_bracket_compatible())
    fail(ErrorKind::ConstructionFailure, "theta is not an involutive automorphism");
  return theta;
}

Involution Involution::compact_tau(std::shared_ptr<const LieAlgebra> alg) {
  int d = alg->dim();
  ExactMatrix M(d, d);
  for (int j = 1; j <= alg->num_h(); ++j)
    M.at(alg->h_index(j), alg->h_index(j)) = GaussRational(-1);
  for (const Root& r : alg->roots().positive_roots) {
    M.at(alg->neg_root_index(r), alg->pos_root_index(r)) = GaussRational(-1);
    M.at(alg->pos_root_index(r), alg->neg_root_index(r)) = GaussRational(-1);
  }
  for (int c = 0; c < alg->center_count(); ++c)
    M.at(alg->center_index(c), alg->center_index(c)) = GaussRational(-1);
  Involution tau(std::move(alg), std::move(M), true);
  if (!tau.is_involutive() || !tau.is_bracket_compatible())
    fail(ErrorKind::ConstructionFailure, "tau is not an involutive conjugation");
  return tau;
}

Involution Involution::split_sigma(std::shared_ptr<const LieAlgebra> alg) {
  Involution theta = cartan_theta(alg);
  Involution tau = compact_tau(alg);
  Involution sigma = tau.compose(theta);
  if (!sigma.is_involutive() || !sigma.is_bracket_compatible() ||
      !theta.commutes_with(tau))
    fail(ErrorKind::ConstructionFailure, "sigma construction failed");
  return sigma;
}

Involution Involution::entrywise_conjugation(
    std::shared_ptr<const LieAlgebra> alg) {
  int d = alg->dim();
  Involution s(alg, ExactMatrix::identity(d), true);
  if (!s.is_bracket_compatible())
    fail(ErrorKind::ConstructionFailure,
         "structure constants are not real; entrywise conjugation invalid");
  return s;
}

std::string Involution::json() const {
  std::ostringstream os;
  os << "{\"antilinear\": " << (antilinear_ ? "true" : "false")
     << ", \"labels\": [";
  for (int i = 0; i < alg_->dim(); ++i) {
    if (i) os << ", ";
    os << '"' << alg_->labels()[i] << '"';
  }
  os << "], \"entries\": [";
  bool first = true;
  for (int i = 0; i < mat_.rows(); ++i)
    for (int j = 0; j < mat_.cols(); ++j) {
      const GaussRational& c = mat_.at(i, j);
      if (c.is_zero()) continue;
      if (!first) os << ", ";
      first = false;
      os << "{\"i\": " << i << ", \"j\": " << j << ", \"re\": \""
         << c.re.str() << "\", \"im\": \"" << c.im.str() << "\"}";
    }
  os << "]}";
  return os.str();
}

RealFormInfo real_form(const Involution& sigma) {
  const auto& alg = sigma.algebra();
  int d = alg->dim();
  std::vector<Vec> candidates;
  for (int j = 0; j < d; ++j) {
    Vec v(d);
    v[j] = GaussRational(1);
    Vec sv = sigma.apply(v);
    candidates.push_back(v + sv);
    Vec iv = GaussRational::i() * (v - sv);
    candidates.push_back(iv);
  }
  std::vector<int> keep = independent_subset_real(candidates);
  RealFormInfo info;
  for (int i : keep) info.basis.push_back(candidates[i]);
  ExactMatrix gram(static_cast<int>(info.basis.size()),
                   static_cast<int>(info.basis.size()));
  for (size_t i = 0; i < info.basis.size(); ++i)
    for (size_t j = 0; j < info.basis.size(); ++j)
      gram.at(static_cast<int>(i), static_cast<int>(j)) =
          alg->killing_pair(info.basis[i], info.basis[j]);
  info.killing_signature = hermitian_signature(gram);
  return info;
}

}  // namespace lieherm
