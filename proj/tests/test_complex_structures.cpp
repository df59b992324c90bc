#include <doctest.h>

#include "lieherm/complex_structure.hpp"
#include "test_util.hpp"

using namespace lieherm;

TEST_CASE("non-regular q: basis and validity") {
  auto ctx = make_split_sl_context(2);
  auto q = build_nonregular_q(ctx);
  REQUIRE(q.n() == 4);
  int d = ctx.alg->dim();
  // Ht1 = h1 + 2 h2 in coroot coordinates
  CHECK(q.q_basis[0][ctx.alg->h_index(1)] == GaussRational(1));
  CHECK(q.q_basis[0][ctx.alg->h_index(2)] == GaussRational(2));
  // e0 = e_{a1} + sigma(e_{a2}) = e_{a1} - e_{-a1}
  Vec e0 = ctx.e_zero();
  CHECK(e0[ctx.alg->pos_root_index(Root{1, 1})] == GaussRational(1));
  CHECK(e0[ctx.alg->neg_root_index(Root{1, 1})] == GaussRational(-1));
  CHECK(is_zero(e0 - q.q_basis[3]));
  (void)d;

  auto m3 = build_nonregular_q(make_split_sl_context(3));
  CHECK(m3.n() == 12);
}

TEST_CASE("subalgebra and complement checks with witnesses") {
  auto ctx = make_split_sl_context(2);
  const auto& alg = ctx.alg;
  int d = alg->dim();
  auto unit = [&](int idx) { return testutil::unit_vec(d, idx); };

  // Borel: h + positive root spaces; closed but not a complement.
  std::vector<Vec> borel;
  for (int j = 1; j <= 2; ++j) borel.push_back(unit(alg->h_index(j)));
  for (const Root& r : alg->roots().positive_roots)
    borel.push_back(unit(alg->pos_root_index(r)));
  auto chk = subalgebra_complement_check(alg, ctx.sigma, borel);
  CHECK(chk.closed);
  CHECK_FALSE(chk.complement);
  CHECK_FALSE(chk.witness.empty());

  // The genuine q.
  auto q = build_nonregular_q(ctx);
  auto chk2 = subalgebra_complement_check(alg, ctx.sigma, q.q_basis, q.q_labels);
  CHECK(chk2.closed);
  CHECK(chk2.complement);

  // e0 replaced by e_{a_{m-1}} + e_{a_m}: the span contains all positive
  // root vectors, so it closes and complements (it is the regular structure).
  std::vector<Vec> replaced = {ctx.h_tilde(1),
                               unit(alg->pos_root_index(Root{1, 1})) +
                                   unit(alg->pos_root_index(Root{2, 1})),
                               unit(alg->pos_root_index(Root{2, 1})),
                               unit(alg->pos_root_index(Root{1, 2}))};
  auto chk3 = subalgebra_complement_check(alg, ctx.sigma, replaced);
  CHECK(chk3.closed);
  CHECK(chk3.complement);

  // A genuinely non-closed span: gamma-root vector flipped to negative.
  std::vector<Vec> broken = {ctx.h_tilde(1), ctx.e_zero(),
                             unit(alg->pos_root_index(Root{2, 1})),
                             unit(alg->neg_root_index(Root{1, 2}))};
  auto chk4 = subalgebra_complement_check(alg, ctx.sigma, broken);
  CHECK_FALSE(chk4.closed);
  CHECK_FALSE(chk4.witness.empty());
}

TEST_CASE("h-regularity of the two structures") {
  auto ctx = make_split_sl_context(2);
  auto h = ctx.alg->cartan_basis();
  auto q = build_nonregular_q(ctx);
  RegularityCheck reg = h_regularity_check(q, h);
  CHECK_FALSE(reg.ad_stable);
  CHECK_FALSE(reg.witness.empty());
  // the concrete witness: [H_{a_{m-1}}, e0] escapes q
  int d = ctx.alg->dim();
  Vec hm1 = testutil::unit_vec(d, ctx.alg->h_index(1));
  CHECK_FALSE(subspace_contains(q.q_basis, ctx.alg->bracket(hm1, ctx.e_zero())));

  auto mor = build_regular_morimoto(ctx);
  RegularityCheck reg2 = h_regularity_check(mor, h);
  CHECK(reg2.ad_stable);
  CHECK(reg2.splits);

  // NotCartan: non-abelian h
  std::vector<Vec> bad = {testutil::unit_vec(d, ctx.alg->pos_root_index(Root{1, 1})),
                          testutil::unit_vec(d, ctx.alg->neg_root_index(Root{1, 1}))};
  CHECK_THROWS_AS(h_regularity_check(q, bad), Error);
  // NotCartan: abelian but not self-normalizing
  std::vector<Vec> small = {testutil::unit_vec(d, ctx.alg->h_index(1))};
  CHECK_THROWS_AS(h_regularity_check(q, small), Error);
}

TEST_CASE("sigma normalizer locations") {
  for (int m : {2, 3}) {
    auto ctx = make_split_sl_context(m);
    auto q = build_nonregular_q(ctx);
    auto h = ctx.alg->cartan_basis();
    auto norm = sigma_normalizer(q);
    for (const Vec& w : norm) CHECK(subspace_contains(h, w));
    CHECK(nonregularity_certificate(q, h));

    auto mor = build_regular_morimoto(ctx);
    auto norm2 = sigma_normalizer(mor);
    for (int k = 1; k <= m - 1; ++k)
      CHECK(subspace_contains(norm2, ctx.h_tilde(k)));
    CHECK_FALSE(nonregularity_certificate(mor, h));
  }
}

TEST_CASE("dependent spanning sets are echelonized silently") {
  auto ctx = make_split_sl_context(2);
  auto q = build_nonregular_q(ctx);
  std::vector<Vec> redundant = q.q_basis;
  redundant.push_back(q.q_basis[0] + GaussRational(2) * q.q_basis[1]);
  auto cs = make_complex_structure(ctx.alg, ctx.sigma, redundant);
  CHECK(cs.n() == 4);
}

TEST_CASE("abelian toy: the normalizer is everything") {
  auto cs = testutil::abelian_structure(2);
  auto norm = sigma_normalizer(cs);
  CHECK(norm.size() == cs.q_basis.size());
  for (const Vec& v : cs.q_basis) CHECK(subspace_contains(norm, v));
}

TEST_CASE("the I_lambda family") {
  auto fam = build_sl3_family(GaussRational(0));
  int d = fam.alg->dim();
  // [x, ybar] = u at lambda = 0
  Vec x = testutil::unit_vec(d, 1), yb = testutil::unit_vec(d, 6);
  CHECK(fam.alg->bracket(x, yb) == testutil::unit_vec(d, 0));
  // [z, zbar] = u - ubar
  Vec z = testutil::unit_vec(d, 3), zb = testutil::unit_vec(d, 7);
  CHECK(fam.alg->bracket(z, zb) ==
        testutil::unit_vec(d, 0) - testutil::unit_vec(d, 4));

  auto fam2 = build_sl3_family(GaussRational(Rational(1, 2)));
  Vec u = testutil::unit_vec(d, 0);
  CHECK(fam2.alg->bracket(u, x) == GaussRational(Rational(3, 2)) * x);
  CHECK_THROWS_AS(build_sl3_family(GaussRational(2)), Error);

  // regular with respect to <u, ubar>, hence no nonregularity certificate
  std::vector<Vec> h = {testutil::unit_vec(d, 0), testutil::unit_vec(d, 4)};
  RegularityCheck reg = h_regularity_check(fam.q, h);
  CHECK(reg.ad_stable);
  CHECK(reg.splits);
  CHECK_FALSE(nonregularity_certificate(fam.q, h));
}

TEST_CASE("induced J: square, eigenspace, integrability") {
  auto ctx = make_split_sl_context(2);
  auto q = build_nonregular_q(ctx);
  JOperator J = induced_J(q);
  CHECK(J.mat * J.mat ==
        GaussRational(-1) * ExactMatrix::identity(J.mat.rows()));
  CHECK(j_eigenspace_matches(q, J));
  CHECK(nijenhuis_vanishes(q, J));

  auto fam = build_sl3_family(GaussRational(Rational(1, 3), Rational(1, 5)));
  JOperator J2 = induced_J(fam.q);
  CHECK(J2.mat * J2.mat ==
        GaussRational(-1) * ExactMatrix::identity(J2.mat.rows()));
  CHECK(j_eigenspace_matches(fam.q, J2));
  CHECK(nijenhuis_vanishes(fam.q, J2));
}
