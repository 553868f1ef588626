#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "concordance/rules.hpp"
#include "json.hpp"

namespace concordance {

struct Step {
  rules::StepKind kind = rules::StepKind::Structural;
  std::string lemma;
  nlohmann::json params;
  std::vector<std::string> hypotheses;
  std::string claim;
};

// An append-only derivation. Serialized as
//   {"theorem", "params", "goal", "steps": [{"kind","lemma","params","hypotheses","claim"}], "verdict"}.
struct Certificate {
  std::string theorem;
  nlohmann::json params;
  std::string goal;
  std::vector<Step> steps;
  std::string verdict;
};

nlohmann::json to_json(const Certificate& cert);
// Throws std::invalid_argument when the document does not have the certificate shape.
Certificate certificate_from_json(const nlohmann::json& doc);

// [[T(q,kq+p) - T(p,q) - k T(q,q+1)]] >> [1,p-1,p-1,1], for gcd(p,q) = 1,
// 4 <= p < q/2, k >= 1. Also records epsilon = 1, the a1/a2 bounds and the
// exact vanishing of Upsilon. Precondition failures throw std::invalid_argument.
Certificate certify_proposition(std::int64_t p, std::int64_t q, std::int64_t k);

// |[[T(q,kq+p) - T(p,q) - k T(q,q+1)]]| << [1,q-1,q-1,1], for gcd(p,q) = 1,
// 4 <= p < q, k >= 1.
Certificate certify_upper_bound(std::int64_t p, std::int64_t q, std::int64_t k);

struct FamilyMember {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t k = 0;

  bool operator==(const FamilyMember&) const = default;
};

// Produces the i-th member, i = 1, 2, ...
using FamilyRule = std::function<FamilyMember(std::int64_t)>;

// p_i = 3^i + 1, q_i = 2*3^i + 3, k_i = 1.
FamilyMember default_family_rule(std::int64_t i);

struct FamilyResult {
  std::vector<FamilyMember> members;
  std::vector<Certificate> propositions;
  std::vector<Certificate> upper_bounds;
  std::vector<bool> upsilon_vanishes;
  // Chain [[K1]] << [[K2]] << ... and linear independence.
  Certificate independence;
};

// Member constraint violations throw std::invalid_argument naming the index.
FamilyResult build_family(std::int64_t count, const FamilyRule& rule = default_family_rule);

nlohmann::json to_json(const FamilyResult& family);

}  // namespace concordance

namespace concordance {

// "T_{q,kq+p}#-T_{p,q}#-kT_{q,q+1}"
std::string connected_sum_notation(const FamilyMember& m);

}  // namespace concordance
