#include <random>

#include "concordance/pl_function.hpp"
#include "concordance/serialize.hpp"
#include "concordance/upsilon.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace concordance;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/5") == r(7, 5));
  CHECK(parse_rational("-3") == r(-3));
  CHECK(parse_rational("0.25") == r(1, 4));
  CHECK(parse_rational("6/4") == r(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_string(r(-2, 4)) == "-1/2");
  CHECK(to_string(r(3)) == "3");
}

TEST_CASE("PL function canonical form") {
  PLFunction f({r(0), r(1), r(3, 2), r(2)}, {r(0), r(-1), r(-1, 2), r(0)});
  CHECK(f.breakpoints() == std::vector<Rational>{r(0), r(1), r(2)});
  CHECK(f == PLFunction({r(0), r(1), r(2)}, {r(0), r(-1), r(0)}));
  CHECK(PLFunction() == PLFunction({r(0), r(2)}, {r(0), r(0)}));
  CHECK_THROWS_AS(PLFunction({r(0), r(1)}, {r(0), r(0)}), std::invalid_argument);
  CHECK_THROWS_AS(PLFunction({r(0), r(1), r(1), r(2)}, {r(0), r(0), r(0), r(0)}), std::invalid_argument);
  CHECK_THROWS_AS(PLFunction({r(0), r(2)}, {r(0)}), std::invalid_argument);
}

TEST_CASE("PL function evaluation") {
  PLFunction f({r(0), r(1), r(2)}, {r(0), r(-1), r(0)});
  CHECK(f(r(1)) == r(-1));
  CHECK(f(r(1, 2)) == r(-1, 2));
  CHECK(f(r(0)) == 0);
  CHECK(PLFunction()(r(7, 5)) == 0);
  CHECK_THROWS_AS(f(r(-1, 10)), std::out_of_range);
  CHECK_THROWS_AS(f(r(21, 10)), std::out_of_range);
}

TEST_CASE("PL function arithmetic") {
  auto y23 = upsilon_torus(TorusKnot(2, 3));
  CHECK((y23 + -y23).is_zero());
  CHECK((y23 - y23).is_zero());
  CHECK((Integer(0) * upsilon_torus(TorusKnot(3, 4))).is_zero());
  CHECK(Integer(2) * upsilon_torus(TorusKnot(4, 5)) == upsilon_torus(TorusKnot(4, 9)));
  PLFunction f({r(0), r(1, 3), r(2)}, {r(0), r(1), r(0)});
  PLFunction g({r(0), r(3, 2), r(2)}, {r(0), r(-2), r(0)});
  auto h = f + g;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto t = oracle::random_t(rng);
    CHECK(h(t) == f(t) + g(t));
    CHECK((Integer(-3) * f)(t) == -3 * f(t));
  }
}

TEST_CASE("upsilon examples") {
  auto y = upsilon_torus(TorusKnot(2, 3));
  CHECK(y.breakpoints() == std::vector<Rational>{r(0), r(1), r(2)});
  CHECK(y.values() == std::vector<Rational>{r(0), r(-1), r(0)});
  CHECK(y(r(1)) == -1);
  CHECK(y(r(0)) == 0);
  CHECK(upsilon_torus(TorusKnot(1, 7)).is_zero());
}

TEST_CASE("upsilon of sums") {
  CHECK(upsilon_of_sum(TorusKnotSum()).is_zero());
  CHECK(upsilon_of_sum(three_torus_knot_sum(4, 9, 1)).is_zero());
  CHECK(upsilon_of_sum(three_torus_knot_sum(10, 21, 1)).is_zero());
  CHECK(upsilon_of_sum(three_torus_knot_sum(28, 57, 1)).is_zero());
  CHECK_FALSE(upsilon_of_sum(TorusKnotSum(TorusKnot(2, 3))).is_zero());
  CHECK(three_torus_knot_sum(4, 9, 1).to_string() == "T(9,13) - T(4,9) - T(9,10)");
  CHECK(three_torus_knot_sum(4, 9, 2).to_string() == "T(9,22) - T(4,9) - 2*T(9,10)");
}

TEST_CASE("recursion examples") {
  CHECK(check_recursion(4, 1, 2));
  CHECK(check_recursion(9, 4, 1));
  CHECK(check_recursion(5, 3, 0));
  CHECK_THROWS_AS(check_recursion(6, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_recursion(9, 4, -1), std::invalid_argument);
}

TEST_CASE("recursion distinguishes wrong coefficients") {
  auto lhs = upsilon_torus(TorusKnot(9, 13));
  auto rhs = upsilon_torus(TorusKnot(4, 9)) + Integer(2) * upsilon_torus(TorusKnot(9, 10));
  CHECK_FALSE(lhs == rhs);
}

TEST_CASE("envelope matches direct maximization") {
  std::mt19937_64 rng(3);
  for (auto [p, q] : oracle::coprime_pairs(1, 20)) {
    auto y = upsilon_torus(TorusKnot(p, q));
    for (int i = 0; i < 20; ++i) {
      auto t = oracle::random_t(rng);
      REQUIRE(y(t) == oracle::upsilon(p, q, t));
    }
    for (const auto& t : y.breakpoints()) REQUIRE(y(t) == oracle::upsilon(p, q, t));
  }
}

TEST_CASE("upsilon structure") {
  for (auto [p, q] : oracle::coprime_pairs(2, 25)) {
    CAPTURE(p);
    CAPTURE(q);
    auto y = upsilon_torus(TorusKnot(p, q));
    CHECK(y(r(0)) == 0);
    CHECK(y(r(2)) == 0);
    CHECK(y.is_convex());
    CHECK(y.slopes().front() == -r((p - 1) * (q - 1), 2));
    for (const auto& t : y.breakpoints()) CHECK(y(t) == y(2 - t));
  }
}

TEST_CASE("PL function serialization") {
  auto y = upsilon_torus(TorusKnot(3, 4));
  auto doc = to_json(y);
  CHECK(doc["breakpoints"].front() == "0");
  CHECK(pl_function_from_json(doc) == y);
  CHECK(to_csv(upsilon_torus(TorusKnot(2, 3))) == "t,value\n0,0\n1,-1\n2,0\n");
  auto svg = to_svg(y, "T(3,4)");
  CHECK(svg.find("viewBox=\"0 0 800 400\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK_THROWS_AS(pl_function_from_json(nlohmann::json{{"breakpoints", {"0", "1"}}, {"values", {"0", "0"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pl_function_from_json(nlohmann::json::array()), std::invalid_argument);
}
