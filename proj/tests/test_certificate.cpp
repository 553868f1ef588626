#include "concordance/certificate.hpp"
#include "concordance/verify.hpp"
#include "doctest.h"

using namespace concordance;
using nlohmann::json;

namespace {

bool verifies(const Certificate& c) { return verify_certificate(c).ok; }

std::size_t count_kind(const Certificate& c, rules::StepKind kind) {
  std::size_t n = 0;
  for (const auto& s : c.steps) n += s.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("predicates") {
  CHECK(evaluate_predicate("gcd(4,9) = 1"));
  CHECK_FALSE(evaluate_predicate("gcd(4,6) = 1"));
  CHECK(evaluate_predicate("13 = 1*9 + 4"));
  CHECK_FALSE(evaluate_predicate("13 = 1*9 + 5"));
  CHECK(evaluate_predicate("2*4 < 9"));
  CHECK_FALSE(evaluate_predicate("2*5 < 9"));
  CHECK(evaluate_predicate("9 <= 10"));
  CHECK(evaluate_predicate("staircase(9,13) starts with [1,8,1,3,1,4]"));
  CHECK_FALSE(evaluate_predicate("staircase(9,13) starts with [1,8,1,3,1,5]"));
  CHECK(evaluate_predicate("max(staircase(9,13)) <= 8"));
  CHECK_FALSE(evaluate_predicate("max(staircase(9,13)) <= 7"));
  CHECK(evaluate_predicate("peel(staircase(4,9), 3) = 2"));
  CHECK(evaluate_predicate("recursion(9,4,1) holds"));
  CHECK(evaluate_predicate("upsilon(T(9,13) - T(4,9) - T(9,10)) = 0"));
  CHECK_FALSE(evaluate_predicate("upsilon(T(9,13) - T(4,9)) = 0"));
  CHECK(evaluate_predicate("(2*[1,3,3,1] + O(4,9)) - 2*[1,3,3,1] = O(4,9)"));
  CHECK_THROWS_AS(evaluate_predicate("hello"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_predicate("staircase(4,6) starts with [1]"), std::invalid_argument);
}

TEST_CASE("proposition certificates") {
  auto a = certify_proposition(4, 9, 1);
  CHECK(a.goal == "[[T(9,13) - T(4,9) - T(9,10)]] >> [1,3,3,1]");
  CHECK(a.verdict == "verified");
  CHECK(verifies(a));
  CHECK(count_kind(a, rules::StepKind::Axiom) > 0);
  CHECK(count_kind(a, rules::StepKind::Structural) > 0);

  auto b = certify_proposition(10, 21, 1);
  CHECK(b.goal == "[[T(21,31) - T(10,21) - T(21,22)]] >> [1,9,9,1]");
  CHECK(verifies(b));

  CHECK(verifies(certify_proposition(4, 9, 3)));
  CHECK(verifies(certify_proposition(5, 11, 2)));
  CHECK_THROWS_AS(certify_proposition(4, 9, 0), std::invalid_argument);
  CHECK_THROWS_AS(certify_proposition(3, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify_proposition(4, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify_proposition(4, 10, 1), std::invalid_argument);
}

TEST_CASE("proposition holds across a range of parameters") {
  for (std::int64_t p = 4; p <= 9; ++p)
    for (std::int64_t q = 2 * p + 1; q <= 24; ++q)
      if (std::gcd(p, q) == 1)
        for (std::int64_t k = 1; k <= 2; ++k) {
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(k);
          CHECK(verifies(certify_proposition(p, q, k)));
        }
}

TEST_CASE("upper bound certificates") {
  auto a = certify_upper_bound(4, 9, 1);
  CHECK(a.goal == "|[[T(9,13) - T(4,9) - T(9,10)]]| << [1,8,8,1]");
  CHECK(verifies(a));
  auto b = certify_upper_bound(10, 21, 1);
  CHECK(b.goal == "|[[T(21,31) - T(10,21) - T(21,22)]]| << [1,20,20,1]");
  CHECK(verifies(b));
  CHECK(verifies(certify_upper_bound(4, 7, 1)));
  CHECK_THROWS_AS(certify_upper_bound(3, 7, 1), std::invalid_argument);
}

TEST_CASE("json round trip") {
  auto a = certify_proposition(4, 9, 1);
  auto doc = to_json(a);
  auto back = certificate_from_json(doc);
  CHECK(to_json(back) == doc);
  CHECK(verifies(back));
  auto extra = doc;
  extra["note"] = "x";
  CHECK_THROWS_AS(certificate_from_json(extra), std::invalid_argument);
  auto missing = doc;
  missing.erase("goal");
  CHECK_THROWS_AS(certificate_from_json(missing), std::invalid_argument);
  CHECK_FALSE(verify_document(json::array()).ok);
}

TEST_CASE("tampering is detected") {
  const auto good = certify_proposition(4, 9, 1);

  SUBCASE("relabelled axiom") {
    auto c = good;
    for (auto& s : c.steps)
      if (s.kind == rules::StepKind::Axiom) {
        s.kind = rules::StepKind::Structural;
        break;
      }
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("altered claim") {
    auto c = good;
    c.steps[0].claim += " ";
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("dropped step") {
    auto c = good;
    c.steps.erase(c.steps.begin());
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("premise used before it is proved") {
    auto c = good;
    std::swap(c.steps[0], c.steps[1]);
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("dropped hypothesis") {
    auto c = good;
    c.steps[0].hypotheses.pop_back();
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("wrong goal") {
    auto c = good;
    c.goal = "[[T(9,13) - T(4,9) - T(9,10)]] >> [1,8,8,1]";
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("verdict") {
    auto c = good;
    c.verdict = "unverified";
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("params") {
    auto c = good;
    c.steps[0].params["q"] = 14;
    CHECK_FALSE(verifies(c));
  }
  SUBCASE("unknown lemma") {
    auto c = good;
    c.steps[0].lemma = "trust_me";
    CHECK_FALSE(verifies(c));
  }
}

TEST_CASE("default family") {
  CHECK(default_family_rule(1) == FamilyMember{4, 9, 1});
  CHECK(default_family_rule(2) == FamilyMember{10, 21, 1});
  CHECK(default_family_rule(3) == FamilyMember{28, 57, 1});

  auto family = build_family(3);
  REQUIRE(family.members.size() == 3);
  CHECK(connected_sum_notation(family.members[0]) == "T_{9,13}#-T_{4,9}#-T_{9,10}");
  CHECK(connected_sum_notation(family.members[1]) == "T_{21,31}#-T_{10,21}#-T_{21,22}");
  CHECK(connected_sum_notation(family.members[2]) == "T_{57,85}#-T_{28,57}#-T_{57,58}");
  CHECK(connected_sum_notation({4, 9, 2}) == "T_{9,22}#-T_{4,9}#-2T_{9,10}");
  for (bool v : family.upsilon_vanishes) CHECK(v);
  CHECK(verifies(family.independence));
  for (const auto& c : family.propositions) CHECK(verifies(c));
  for (const auto& c : family.upper_bounds) CHECK(verifies(c));

  auto doc = to_json(family);
  CHECK(verify_document(doc).ok);
  auto tampered = doc;
  tampered["members"][1]["knot"] = "T(21,31) - T(10,21) - T(21,23)";
  CHECK_FALSE(verify_document(tampered).ok);
}

TEST_CASE("family edge cases") {
  auto empty = build_family(0);
  CHECK(empty.members.empty());
  CHECK(verifies(empty.independence));
  CHECK_THROWS_AS(build_family(-1), std::invalid_argument);

  auto repeat = [](std::int64_t) { return FamilyMember{4, 9, 1}; };
  CHECK_THROWS_WITH_AS(build_family(2, repeat), doctest::Contains("2"), std::invalid_argument);

  auto bad_member = [](std::int64_t i) { return i == 1 ? FamilyMember{4, 9, 1} : FamilyMember{4, 8, 1}; };
  CHECK_THROWS_AS(build_family(2, bad_member), std::invalid_argument);

  // Equal q_i = p_{i+1} is allowed by the chain condition.
  auto touching = [](std::int64_t i) { return i == 1 ? FamilyMember{4, 9, 1} : FamilyMember{9, 19, 1}; };
  auto family = build_family(2, touching);
  CHECK(verifies(family.independence));
}

TEST_CASE("certify document shape") {
  json doc = {{"proposition", to_json(certify_proposition(4, 9, 1))},
              {"upper_bound", to_json(certify_upper_bound(4, 9, 1))}};
  CHECK(verify_document(doc).ok);
  auto mixed = doc;
  mixed["upper_bound"] = to_json(certify_upper_bound(10, 21, 1));
  CHECK_FALSE(verify_document(mixed).ok);
}
