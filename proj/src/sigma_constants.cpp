#include "lieherm/sigma_constants.hpp"

namespace lieherm {

SigmaConstants::SigmaConstants(std::shared_ptr<const LieAlgebra> alg,
                               const Involution& sigma, int m)
    : alg_(std::move(alg)), m_(m) {
  int N = alg_->N();
  if (N != 2 * m - 1) fail(ErrorKind::Internal, "sigma constants need sl(2m-1)");
  int d = alg_->dim();
  for (const Root& r : alg_->roots().positive_roots) {
    Root partner{2 * m - r.len - r.start, r.len};
    Vec e(d);
    e[alg_->pos_root_index(r)] = GaussRational(1);
    Vec ep(d);
    ep[alg_->pos_root_index(partner)] = GaussRational(1);
    table_[{r.start, r.len}] = alg_->killing_norm_pair(e, sigma.apply(ep));
  }
}

const GaussRational& SigmaConstants::at(int j, int k) const {
  auto it = table_.find({j, k});
  if (it == table_.end()) fail(ErrorKind::Internal, "missing sigma constant");
  return it->second;
}

bool SigmaConstants::conjugation_symmetry() const {
  for (const auto& [jk, v] : table_) {
    auto [j, k] = jk;
    if (v.conj() != at(2 * m_ - k - j, k)) return false;
  }
  return true;
}

bool SigmaConstants::gamma_reality() const {
  for (int j = 1; j <= m_ - 1; ++j)
    if (!gamma(j).is_real()) return false;
  return true;
}

bool SigmaConstants::product_identity() const {
  const auto& rs = alg_->roots();
  for (const Root& a : rs.positive_roots)
    for (const Root& b : rs.positive_roots) {
      Root sum;
      if (!root_sum(a, b, &sum)) continue;
      // Coroots are the duals of the normalized form.
      GaussRational g =
          alg_->killing_norm_pair(alg_->coroot(a), alg_->coroot(b));
      GaussRational lhs = at(sum);
      GaussRational rhs = -at(a) * at(b) * g;
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace lieherm
