#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

// The inference rules certificates are written in. A rule, named by its
// lemma tag and instantiated with integer parameters, fixes the step's kind,
// the exact text of every hypothesis, and the exact text of the claim.
// Hypotheses are either premises (claims of earlier steps) or predicates
// that a checker evaluates from scratch.
namespace concordance::rules {

enum class StepKind { Structural, Axiom };

std::string to_string(StepKind kind);
StepKind step_kind_from_string(std::string_view text);

// Which staircase prefix a decomposition asserts for T(p,q), q = kp + r:
//   RemainderOne   r = 1:          (1,p-1)^k, 2
//   AnyRemainder   1 < r < p:      (1,p-1)^k, 1, r-1
//   HalfRemainder  3 <= r < p/2:   (1,p-1)^k, 1, r-1, 1, p-r-1
enum class Pattern { RemainderOne, AnyRemainder, HalfRemainder };

std::string to_string(Pattern pattern);
Pattern pattern_from_string(std::string_view text);

std::vector<std::int64_t> pattern_prefix(std::int64_t p, std::int64_t q, Pattern pattern);

struct Hypothesis {
  std::string text;
  bool premise = false;
};

struct Instance {
  StepKind kind = StepKind::Structural;
  std::vector<Hypothesis> hypotheses;
  std::string claim;
};

// Throws std::invalid_argument for an unknown lemma tag or malformed parameters.
Instance instantiate(std::string_view lemma, const nlohmann::json& params);

// Statement proved by a certificate for theorem "three_torus_knots",
// "upper_bound" or "family". Throws std::invalid_argument otherwise.
std::string goal_statement(std::string_view theorem, const nlohmann::json& params);

// Text fragments shared by claims, hypotheses and reports.
std::string knot(std::int64_t p, std::int64_t q);       // T(p,q)
std::string block(std::int64_t n);                      // [1,n,n,1]
std::string remainder(std::int64_t p, std::int64_t q);  // O(p,q)
std::string bracket(const std::vector<std::int64_t>& steps);
std::string family_knot(std::int64_t p, std::int64_t q, std::int64_t k);  // T(q,kq+p) - T(p,q) - k*T(q,q+1)

// Parameter objects for each rule.
nlohmann::json knot_params(std::int64_t p, std::int64_t q);
nlohmann::json knot_params(std::int64_t p, std::int64_t q, Pattern pattern);
nlohmann::json member_params(std::int64_t p, std::int64_t q, std::int64_t k);
nlohmann::json instantiate_params(std::int64_t p, std::int64_t q, std::int64_t n);
nlohmann::json comparison_params(bool first_clause, const std::vector<std::int64_t>& lhs,
                                 const std::vector<std::int64_t>& rhs);
nlohmann::json transitivity_params(std::int64_t p, std::int64_t q, const std::vector<std::int64_t>& via,
                                   const std::vector<std::int64_t>& to);
nlohmann::json chain_params(const std::vector<std::int64_t>& lower, const std::vector<std::int64_t>& upper);
nlohmann::json family_params(const std::vector<std::vector<std::int64_t>>& members);

}  // namespace concordance::rules
