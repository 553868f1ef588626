#include <random>

#include "concordance/semigroup.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace concordance;

TEST_CASE("torus knot validation") {
  CHECK_NOTHROW(TorusKnot(1, 5));
  CHECK(TorusKnot(1, 5).is_unknot());
  CHECK_THROWS_AS(TorusKnot(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnot(9, 4), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnot(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnot(3, 3), std::invalid_argument);
  CHECK(TorusKnot(4, 9).genus() == 12);
  CHECK(TorusKnot(57, 85).conductor() == 4704);
  CHECK(TorusKnot(9, 13).to_string() == "T(9,13)");
}

TEST_CASE("membership examples") {
  Semigroup s{TorusKnot(4, 9)};
  CHECK_FALSE(s.contains(23));
  CHECK(s.contains(0));
  CHECK(s.contains(13));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.contains(24));
}

TEST_CASE("gaps") {
  CHECK(Semigroup{TorusKnot(2, 3)}.gaps() == std::vector<std::int64_t>{1});
  CHECK(Semigroup{TorusKnot(3, 4)}.gaps() == std::vector<std::int64_t>{1, 2, 5});
  CHECK(Semigroup{TorusKnot(1, 5)}.gaps().empty());
}

TEST_CASE("counting") {
  CHECK(Semigroup{TorusKnot(2, 3)}.counting(0) == 0);
  CHECK(Semigroup{TorusKnot(2, 3)}.counting(3) == 2);
  CHECK(Semigroup{TorusKnot(4, 9)}.counting(24) == 12);
}

TEST_CASE("membership matches brute force on every small pair") {
  for (auto [p, q] : oracle::coprime_pairs(1, 30)) {
    Semigroup s{TorusKnot(p, q)};
    for (std::int64_t n = -5; n <= 2 * p * q; ++n) REQUIRE(s.contains(n) == oracle::member(n, p, q));
  }
}

TEST_CASE("gap count is the genus, largest gap is the Frobenius number") {
  for (auto [p, q] : oracle::coprime_pairs(2, 40)) {
    Semigroup s{TorusKnot(p, q)};
    auto gaps = s.gaps();
    CHECK(static_cast<std::int64_t>(gaps.size()) == s.genus());
    CHECK(gaps.back() == p * q - p - q);
  }
}

TEST_CASE("counting matches brute force") {
  std::mt19937_64 rng(7);
  auto pairs = oracle::coprime_pairs(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    auto [p, q] = pairs[rng() % pairs.size()];
    Semigroup s{TorusKnot(p, q)};
    std::int64_t m = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * p * q + 1));
    std::int64_t expected = 0;
    for (std::int64_t n = 0; n < m; ++n) expected += oracle::member(n, p, q);
    CHECK(s.counting(m) == expected);
  }
}

TEST_CASE("large generators stay exact") {
  Semigroup s{TorusKnot(1'000'003, 1'000'033)};
  std::int64_t frobenius = 1'000'003LL * 1'000'033LL - 1'000'003LL - 1'000'033LL;
  CHECK_FALSE(s.contains(frobenius));
  CHECK(s.contains(frobenius + 1));
  CHECK(s.contains(1'000'003LL * 1'000'033LL));
}
