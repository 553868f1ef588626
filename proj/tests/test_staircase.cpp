#include "concordance/staircase.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace concordance;
using V = std::vector<std::int64_t>;

TEST_CASE("staircase examples") {
  CHECK(Staircase::from_torus_knot(TorusKnot(2, 3)).steps() == V{1, 1});
  CHECK(Staircase::from_torus_knot(TorusKnot(3, 4)).steps() == V{1, 2, 2, 1});
  CHECK(Staircase::from_torus_knot(TorusKnot(4, 9)).steps() == V{1, 3, 1, 3, 2, 2, 2, 2, 3, 1, 3, 1});
  CHECK(Staircase::from_torus_knot(TorusKnot(1, 5)).empty());
}

TEST_CASE("staircase validation") {
  CHECK_THROWS_AS(Staircase(V{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Staircase(V{1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Staircase(V{1, 0, 0, 1}), std::invalid_argument);
  CHECK_NOTHROW(Staircase(V{}));
}

TEST_CASE("alexander exponents") {
  CHECK(alexander_exponents(Staircase(V{1, 1})).alpha == V{0, 1, 2});
  CHECK(alexander_exponents(Staircase(V{1, 2, 2, 1})).alpha == V{0, 1, 3, 5, 6});
  CHECK(alexander_exponents(Staircase()).alpha == V{0});
}

TEST_CASE("a-tuple of a staircase") {
  CHECK(a_tuple(Staircase(V{1, 2, 2, 1})) == ATuple(V{1, 2, 2, 1}));
  CHECK(a_tuple(Staircase(V{1, 1})) == ATuple(V{1, 1}));
  CHECK_THROWS_AS(a_tuple(Staircase()), std::invalid_argument);
  CHECK(epsilon(Staircase()).value() == 0);
  CHECK(epsilon(Staircase(V{1, 1})).value() == 1);
}

TEST_CASE("max entry bound and prefixes") {
  CHECK(max_entry_bound(TorusKnot(4, 9)));
  CHECK(max_entry_bound(TorusKnot(2, 3)));
  CHECK(max_entry_bound(TorusKnot(9, 13)));
  auto s49 = Staircase::from_torus_knot(TorusKnot(4, 9));
  CHECK(has_prefix(s49, V{1, 3, 1, 3}));
  CHECK(has_prefix(Staircase::from_torus_knot(TorusKnot(9, 13)), V{1, 8, 1, 3, 1, 4}));
  CHECK_FALSE(has_prefix(Staircase(V{1, 1}), V{2}));
  CHECK_FALSE(has_prefix(Staircase(V{1, 1}), V{1, 1, 1}));
}

TEST_CASE("staircases match the run-scan oracle") {
  for (auto [p, q] : oracle::coprime_pairs(1, 40))
    REQUIRE(Staircase::from_torus_knot(TorusKnot(p, q)).steps() == oracle::staircase(p, q));
}

TEST_CASE("staircase properties over all small pairs") {
  for (auto [p, q] : oracle::coprime_pairs(2, 40)) {
    CAPTURE(p);
    CAPTURE(q);
    auto s = Staircase::from_torus_knot(TorusKnot(p, q));
    const auto& b = s.steps();
    CHECK(std::equal(b.begin(), b.end(), b.rbegin()));
    CHECK(s.total() == (p - 1) * (q - 1));
    CHECK(s.even_sum() == (p - 1) * (q - 1) / 2);
    CHECK(s.max_entry() <= p - 1);
    CHECK(a_tuple(s).condition() == TupleCondition::AllPositive);

    oracle::Poly from_exponents;
    auto alpha = alexander_exponents(s).alpha;
    for (std::size_t i = 0; i < alpha.size(); ++i) from_exponents[alpha[i]] += i % 2 == 0 ? 1 : -1;
    CHECK(oracle::normalize(from_exponents) == oracle::torus_alexander(p, q));
    CHECK(oracle::semigroup_alexander(p, q) == oracle::torus_alexander(p, q));
  }
}
