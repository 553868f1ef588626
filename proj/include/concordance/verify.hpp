#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "concordance/certificate.hpp"
#include "json.hpp"

namespace concordance {

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-checks a certificate step by step: each step must be an instance of
// its rule, premises must be claims of earlier valid steps, predicates are
// re-evaluated from scratch (staircases by brute-force membership), and the
// goal must be the theorem's statement and an established claim.
VerificationReport verify_certificate(const Certificate& cert);

// Accepts a single certificate, the {"proposition","upper_bound"} pair
// written by `certify`, or the document written by `family --json`.
VerificationReport verify_document(const nlohmann::json& doc);

// Evaluates one predicate hypothesis, e.g. "gcd(4,9) = 1",
// "staircase(9,13) starts with [1,8,1,3,1,4]", "upsilon(T(2,3) - T(2,3)) = 0".
// Throws std::invalid_argument when the text is not a predicate.
bool evaluate_predicate(std::string_view text);

}  // namespace concordance
