#include <doctest.h>

#include "lieherm/lie_algebra.hpp"
#include "test_util.hpp"

using namespace lieherm;

TEST_CASE("root data for type A") {
  RootSystem rs = root_data(3);
  REQUIRE(rs.positive_roots.size() == 3);
  CHECK(rs.positive_roots[0] == Root{1, 1});
  CHECK(rs.positive_roots[1] == Root{2, 1});
  CHECK(rs.positive_roots[2] == Root{1, 2});
  CHECK(rs.cartan_matrix[0][1] == -1);
  CHECK(rs.cartan_matrix[0][0] == 2);
  CHECK(root_data(5).positive_roots.size() == 10);
  CHECK_THROWS_AS(root_data(1), Error);
}

TEST_CASE("sl(2) structure") {
  auto alg = LieAlgebra::build_sl(2);
  CHECK(alg->dim() == 3);
  Vec h = testutil::unit_vec(3, alg->h_index(1));
  Vec e = testutil::unit_vec(3, alg->pos_root_index(Root{1, 1}));
  Vec f = testutil::unit_vec(3, alg->neg_root_index(Root{1, 1}));
  CHECK(alg->bracket(h, e) == GaussRational(2) * e);
  CHECK(alg->bracket(e, f) == h);
  CHECK(is_zero(alg->bracket(e, e)));
  CHECK(alg->killing_pair(h, h) == GaussRational(8));
}

TEST_CASE("sl(3) chevalley brackets") {
  auto alg = LieAlgebra::build_sl(3);
  int d = alg->dim();
  Vec e1 = testutil::unit_vec(d, alg->pos_root_index(Root{1, 1}));
  Vec e2 = testutil::unit_vec(d, alg->pos_root_index(Root{2, 1}));
  Vec e12 = testutil::unit_vec(d, alg->pos_root_index(Root{1, 2}));
  CHECK(alg->bracket(e1, e2) == e12);
  Vec h1 = testutil::unit_vec(d, alg->h_index(1));
  CHECK(alg->bracket(h1, e2) == GaussRational(-1) * e2);
  CHECK_THROWS_AS(alg->bracket(e1, Vec(5)), Error);
  CHECK(alg->verify_jacobi());
  CHECK_THROWS_AS(LieAlgebra::build_sl(1), Error);
}

TEST_CASE("killing form against the 2N trace(XY) realization") {
  // lie_core computes B by ad-traces; the elementary-matrix shortcut is the
  // independent route.  E_{ab} entries for sl(3).
  auto alg = LieAlgebra::build_sl(3);
  int d = alg->dim();
  auto entry_matrix = [&](int idx) {
    std::vector<std::vector<long>> m(3, std::vector<long>(3, 0));
    Root r;
    bool negv;
    if (alg->root_of_index(idx, &r, &negv)) {
      int a = negv ? r.col() : r.row();
      int b = negv ? r.row() : r.col();
      m[a - 1][b - 1] = 1;
    } else {
      int j = idx + 1;  // h_j
      m[j - 1][j - 1] = 1;
      m[j][j] = -1;
    }
    return m;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto A = entry_matrix(i), B = entry_matrix(j);
      long tr = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) tr += A[a][b] * B[b][a];
      Vec vi = testutil::unit_vec(d, i), vj = testutil::unit_vec(d, j);
      CHECK(alg->killing_pair(vi, vj) == GaussRational(6 * tr));
    }
}

TEST_CASE("killing duals and root-space orthogonality") {
  auto alg = LieAlgebra::build_sl(3);
  int d = alg->dim();
  for (const Root& r : alg->roots().positive_roots) {
    Vec H = alg->killing_dual(r);
    for (int j = 1; j <= 2; ++j) {
      Vec hj = testutil::unit_vec(d, alg->h_index(j));
      CHECK(alg->killing_pair(hj, H) == alg->root_eval(r, hj));
    }
    // with the normalized form the dual is the coroot
    CHECK(alg->killing_norm_pair(alg->coroot(r), alg->coroot(r)) ==
          GaussRational(2));
  }
  // B(e_a, e_b) = 0 unless a + b = 0
  for (const Root& a : alg->roots().positive_roots)
    for (const Root& b : alg->roots().positive_roots) {
      Vec ea = testutil::unit_vec(d, alg->pos_root_index(a));
      Vec eb = testutil::unit_vec(d, alg->pos_root_index(b));
      Vec fb = testutil::unit_vec(d, alg->neg_root_index(b));
      CHECK(alg->killing_pair(ea, eb).is_zero());
      if (!(a == b)) CHECK(alg->killing_pair(ea, fb).is_zero());
    }
}

TEST_CASE("killing invariance and root-space grading") {
  auto alg = LieAlgebra::build_sl(3);
  int d = alg->dim();
  for (int z = 0; z < d; ++z)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        Vec Z = testutil::unit_vec(d, z), X = testutil::unit_vec(d, x),
            Y = testutil::unit_vec(d, y);
        GaussRational lhs = alg->killing_pair(alg->bracket(Z, X), Y) +
                            alg->killing_pair(X, alg->bracket(Z, Y));
        CHECK(lhs.is_zero());
      }
  // [h, e_a] = a(h) e_a for positive and negative roots
  for (int j = 1; j <= 2; ++j) {
    Vec h = testutil::unit_vec(d, alg->h_index(j));
    for (const Root& r : alg->roots().positive_roots) {
      Vec ep = testutil::unit_vec(d, alg->pos_root_index(r));
      Vec en = testutil::unit_vec(d, alg->neg_root_index(r));
      CHECK(alg->bracket(h, ep) == alg->root_eval(r, h) * ep);
      CHECK(alg->bracket(h, en) == alg->root_eval(r, h, true) * en);
    }
  }
}

TEST_CASE("chevalley normalization: +1 below the lexicographic order") {
  // For composable positive roots with a earlier than b, [e_a, e_b] = e_{a+b}.
  auto alg = LieAlgebra::build_sl(5);
  int d = alg->dim();
  int count = 0;
  for (const Root& a : alg->roots().positive_roots)
    for (const Root& b : alg->roots().positive_roots) {
      Root sum;
      if (!root_sum(a, b, &sum)) continue;
      if (a.start > b.start) continue;  // a < b in lexicographic order
      Vec ea = testutil::unit_vec(d, alg->pos_root_index(a));
      Vec eb = testutil::unit_vec(d, alg->pos_root_index(b));
      CHECK(alg->bracket(ea, eb) ==
            testutil::unit_vec(d, alg->pos_root_index(sum)));
      ++count;
    }
  CHECK(count > 0);
}

TEST_CASE("structure constants export") {
  auto alg = LieAlgebra::build_sl(2);
  std::string js = alg->json_structure();
  CHECK(js.find("\"dim\": 3") != std::string::npos);
  CHECK(js.find("\"labels\"") != std::string::npos);
  CHECK(js.find("\"re\": \"2\"") != std::string::npos);
}

TEST_CASE("semisimplicity check") {
  CHECK_NOTHROW(LieAlgebra::build_sl(3)->require_semisimple_part());
  auto reductive = LieAlgebra::build_sl(2, 1);
  CHECK_NOTHROW(reductive->require_semisimple_part());  // center excluded
}
