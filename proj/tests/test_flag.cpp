#include <doctest.h>

#include "lieherm/flag.hpp"
#include "lieherm/positivity.hpp"

using namespace lieherm;

namespace {
WeightCombo combo(std::initializer_list<long> v) {
  WeightCombo w = WeightCombo::zero(5);
  size_t i = 0;
  for (long c : v) w.B[i++] = Rational(c);
  return w;
}
}  // namespace

TEST_CASE("fundamental weights and the pairing identity") {
  auto w = fundamental_weights(5);
  REQUIRE(w.size() == 4);
  CHECK(w[1] == std::vector<Rational>{Rational(1), Rational(1), Rational(0),
                                      Rational(0), Rational(0)});
  CHECK(fundamental_weight_pairing_check(5));
  CHECK(fundamental_weight_pairing_check(2));
  CHECK(fundamental_weights(2).size() == 1);
}

TEST_CASE("dbeta coefficients") {
  auto d1 = dbeta(combo({1, 1, 1, 1}));
  for (int idx = 0; idx < 10; ++idx) {
    auto [j, l] = DiagTwoForm::pair_of(5, idx);
    CHECK(d1.coeff[idx] == Rational(l - j));
  }
  CHECK(d1.rank() == 10);
  CHECK(classify_diag(d1) == DiagClass::PositiveDef);
  auto d2 = dbeta(combo({1, 0, 0, 0}));
  CHECK(d2.rank() == 4);
  CHECK(d2.coeff[DiagTwoForm::pair_index(5, 1, 2)] == Rational(1));
  CHECK(d2.coeff[DiagTwoForm::pair_index(5, 1, 5)] == Rational(1));
  CHECK(d2.coeff[DiagTwoForm::pair_index(5, 2, 3)] == Rational(0));
  CHECK(dbeta(combo({0, 0, 0, 0})).rank() == 0);
  // the worked example: B = (1,0,0,-3)
  auto d3 = dbeta(combo({1, 0, 0, -3}));
  std::vector<Rational> want = {Rational(1),  Rational(1), Rational(1),
                                Rational(-2), Rational(0), Rational(0),
                                Rational(-3), Rational(0), Rational(-3),
                                Rational(-3)};
  CHECK(d3.coeff == want);
  CHECK(d3.rank() == 7);
  CHECK(classify_diag(d3) == DiagClass::Indefinite);
}

TEST_CASE("dbeta is linear in the weights") {
  auto a = combo({1, 2, 0, -1}), b = combo({0, 1, 1, 3});
  auto lhs = dbeta(a + b);
  auto ra = dbeta(a), rb = dbeta(b);
  for (int i = 0; i < 10; ++i) CHECK(lhs.coeff[i] == ra.coeff[i] + rb.coeff[i]);
}

TEST_CASE("wedge power top form") {
  auto wk = dbeta(combo({1, 1, 1, 1}));
  CHECK(wedge_power_topform({{wk, 10}}) == Rational(3628800) * Rational(288));
  // too few nonzero generators
  CHECK(wedge_power_topform({{dbeta(combo({1, 0, 0, 0})), 5}, {wk, 5}}) ==
        wedge_power_topform({{wk, 5}, {dbeta(combo({1, 0, 0, 0})), 5}}));
  CHECK(wedge_power_topform({{dbeta(combo({1, 0, 0, 0})), 10}}) == Rational(0));
  CHECK_THROWS_AS(wedge_power_topform({{wk, 9}}), Error);
  // multilinearity at exponent 1
  auto f = dbeta(combo({1, -1, 2, 0})), g = dbeta(combo({0, 3, -2, 1}));
  DiagTwoForm sum = f;
  for (int i = 0; i < 10; ++i) sum.coeff[i] += g.coeff[i];
  Rational lhs = wedge_power_topform({{sum, 1}, {wk, 9}});
  Rational rhs = wedge_power_topform({{f, 1}, {wk, 9}}) +
                 wedge_power_topform({{g, 1}, {wk, 9}});
  CHECK(lhs == rhs);
}

TEST_CASE("astheno coefficients of the two worked pairs") {
  auto wk = combo({1, 1, 1, 1});
  auto c2a = astheno_c2(combo({1, 0, 0, 0}), combo({1, -1, 0, 0}), wk);
  REQUIRE(c2a.has_value());
  CHECK(*c2a == Rational(7, 4));
  auto c2b = astheno_c2(combo({1, 0, 0, -3}), combo({0, 1, -1, 0}), wk);
  REQUIRE(c2b.has_value());
  CHECK(*c2b == Rational(7, 5));
  // equal numerator and denominator: c^2 = -1, no positive solution
  CHECK_FALSE(astheno_c2(combo({1, 0, 0, 0}), combo({1, 0, 0, 0}), wk).has_value());
  // swap symmetry c^2 -> 1/c^2
  auto swapped = astheno_c2(combo({1, -1, 0, 0}), combo({1, 0, 0, 0}), wk);
  REQUIRE(swapped.has_value());
  CHECK(*swapped == Rational(4, 7));
  // degenerate denominator
  CHECK_THROWS_AS(astheno_c2(combo({1, 0, 0, 0}), combo({0, 0, 0, 0}), wk),
                  Error);
}

TEST_CASE("semidefiniteness scans of the two worked pairs") {
  auto scan1 = semidef_scan(combo({1, 0, 0, 0}), combo({1, -1, 0, 0}), 10);
  bool rank7 = false;
  for (const auto& e : scan1.entries)
    if (e.rank == 7 && (e.cls == DiagClass::PositiveSemi ||
                        e.cls == DiagClass::NegativeSemi))
      rank7 = true;
  CHECK(rank7);
  CHECK(scan1.obstructed_p == std::set<int>{4, 5, 6, 7, 8, 9, 10});

  auto scan2 = semidef_scan(combo({1, 0, 0, -3}), combo({0, 1, -1, 0}), 10);
  for (const auto& e : scan2.entries) {
    bool semi = e.cls != DiagClass::Indefinite && e.cls != DiagClass::Zero;
    CHECK_FALSE(semi);
  }
  CHECK(scan2.obstructed_p == std::set<int>{2, 3, 4, 7});
  // the two power witnesses
  auto p7 = power_semidefiniteness(dbeta(combo({1, 0, 0, -3})).coeff, 7);
  CHECK(p7.classification == PowerClass::PositiveSemiDef);
  auto p4 = power_semidefiniteness(dbeta(combo({0, 1, -1, 0})).coeff, 4);
  CHECK(p4.classification == PowerClass::PositiveSemiDef);

  // classification flips sign under (A,C) -> (-A,-C)
  for (const auto& e : scan1.entries) {
    if (e.A > 0 || (e.A == 0 && e.C > 0)) {
      for (const auto& e2 : scan1.entries) {
        if (e2.A == -e.A && e2.C == -e.C) {
          auto flip = [](DiagClass c) {
            switch (c) {
              case DiagClass::PositiveDef:
                return DiagClass::NegativeDef;
              case DiagClass::NegativeDef:
                return DiagClass::PositiveDef;
              case DiagClass::PositiveSemi:
                return DiagClass::NegativeSemi;
              case DiagClass::NegativeSemi:
                return DiagClass::PositiveSemi;
              default:
                return c;
            }
          };
          CHECK(e2.cls == flip(e.cls));
          CHECK(e2.rank == e.rank);
        }
      }
    }
  }
  // csv export carries the header and one row per entry
  std::string csv = scan_csv(scan1);
  CHECK(csv.find("A,C,classification,rank,obstructed_p") != std::string::npos);
}
