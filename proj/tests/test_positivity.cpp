#include <doctest.h>

#include "lieherm/positivity.hpp"
#include "test_util.hpp"

using namespace lieherm;

TEST_CASE("herm_rep of simple (1,1)-forms") {
  auto cf = Coframe::make(testutil::abelian_structure(3));
  ExtForm f = ExtForm::monomial(cf, {0, 3}, GaussRational::i());  // i eta^1 ^ conj
  Form11Report rep = herm_rep(f);
  CHECK(rep.rank == 1);
  CHECK(rep.signature == Signature{1, 0, 2});
  CHECK(rep.positive_semidefinite());

  // non-real and wrong-type inputs are rejected
  ExtForm g = ExtForm::monomial(cf, {0, 3}, GaussRational(1));
  CHECK_THROWS_AS(herm_rep(g), Error);
  ExtForm h = ExtForm::monomial(cf, {0, 1}, GaussRational(1));
  CHECK_THROWS_AS(herm_rep(h), Error);

  // mixed signature
  ExtForm k = ExtForm::monomial(cf, {0, 3}, GaussRational::i()) -
              ExtForm::monomial(cf, {1, 4}, GaussRational::i());
  Form11Report rep2 = herm_rep(k);
  CHECK(rep2.signature == Signature{1, 1, 1});
  CHECK_FALSE(rep2.semidefinite());
}

TEST_CASE("herm_rep signature is congruence invariant") {
  auto cf = Coframe::make(testutil::abelian_structure(3));
  ExtForm f = ExtForm::monomial(cf, {0, 3}, GaussRational::i()) +
              ExtForm::monomial(cf, {1, 4}, GaussRational::i() * GaussRational(3));
  Form11Report rep = herm_rep(f);
  RationalRng rng(11);
  for (int t = 0; t < 10; ++t) {
    ExactMatrix T = ExactMatrix::identity(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) T.at(i, j) = rng.next_gauss();
    ExactMatrix congruent = T.conj_transpose() * rep.h * T;
    CHECK(hermitian_signature(congruent) == rep.signature);
  }
}

TEST_CASE("power semidefiniteness: the worked cases") {
  auto R = [](long n) { return Rational(n); };
  std::vector<Rational> d1 = {R(1), R(1), R(1), R(-2), R(-3), R(-3), R(-3),
                              R(0), R(0), R(0)};
  PowerSignReport r1 = power_semidefiniteness(d1, 7);
  CHECK(r1.nonzero_subset_count == 1);
  CHECK(r1.classification == PowerClass::PositiveSemiDef);  // the recorded sign

  std::vector<Rational> d2 = {R(1), R(1), R(-1), R(-1), R(0), R(0)};
  PowerSignReport r2 = power_semidefiniteness(d2, 4);
  CHECK(r2.nonzero_subset_count == 1);
  CHECK(r2.classification == PowerClass::PositiveSemiDef);

  std::vector<Rational> d3 = {R(1), R(2), R(3)};
  CHECK(power_semidefiniteness(d3, 1).classification ==
        PowerClass::PositiveSemiDef);
  CHECK(power_semidefiniteness(d3, 1).nonzero_subset_count == 3);

  std::vector<Rational> d4 = {R(1), R(-1), R(2)};
  CHECK(power_semidefiniteness(d4, 2).classification == PowerClass::Indefinite);
  CHECK(power_semidefiniteness(d4, 3).classification ==
        PowerClass::NegativeSemiDef);

  std::vector<Rational> d5 = {R(0), R(0), R(1)};
  CHECK(power_semidefiniteness(d5, 2).classification == PowerClass::Zero);

  CHECK_THROWS_AS(power_semidefiniteness(d5, 0), Error);
  CHECK_THROWS_AS(power_semidefiniteness(d5, 4), Error);
}

TEST_CASE("transversality falsifier") {
  auto cf = Coframe::make(testutil::abelian_structure(3));
  // Rank-deficient (2,2): product of the first two diagonal directions.
  ExtForm f = diagonal_decomposable(cf, {0, 1});
  FalsifierResult res = transversality_falsifier(f, 400, 7);
  CHECK(res.falsified);
  CHECK_FALSE(res.witness.empty());

  // omega^2 of the identity metric is transverse: never falsified.
  ExtForm omega = diagonal_decomposable(cf, {0}) + diagonal_decomposable(cf, {1}) +
                  diagonal_decomposable(cf, {2});
  ExtForm omega2 = omega.wedge(omega);
  CHECK_FALSE(transversality_falsifier(omega2, 60, 3).falsified);

  // negative decomposable: falsified immediately on an aligned sample
  ExtForm neg = diagonal_decomposable(cf, {0, 1}) * GaussRational(-1) +
                diagonal_decomposable(cf, {0, 2}) * GaussRational(-1) +
                diagonal_decomposable(cf, {1, 2}) * GaussRational(-1);
  CHECK(transversality_falsifier(neg, 50, 1).falsified);
}

TEST_CASE("diagonal positive combinations") {
  auto cf = Coframe::make(testutil::abelian_structure(3));
  ExtForm f = diagonal_decomposable(cf, {0, 1}) * GaussRational(9) +
              diagonal_decomposable(cf, {1, 2});
  CHECK(diagonal_positive_combination(f) == 1);
  CHECK(diagonal_positive_combination(f * GaussRational(-1)) == -1);
  ExtForm g = diagonal_decomposable(cf, {0, 1}) -
              diagonal_decomposable(cf, {1, 2});
  CHECK(diagonal_positive_combination(g) == 0);
  // off-diagonal support disqualifies
  ExtForm off = ExtForm::monomial(cf, {0, 1, 3, 5}, GaussRational(1));
  CHECK(diagonal_positive_combination(off) == 0);
}
