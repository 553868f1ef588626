#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concordance/a_tuple.hpp"
#include "concordance/class_expr.hpp"
#include "concordance/rules.hpp"
#include "concordance/staircase.hpp"

namespace concordance {

struct PeelResult {
  std::int64_t count = 0;  // k in k*[1,n,n,1]
  Staircase remainder;     // the middle palindrome
};

// Rewrites [(1,n)^k, b..., (n,1)^k] as k*[1,n,n,1] + [b...] with k maximal.
// Every remaining entry must be at most n (the splitting hypothesis); a
// violation throws std::invalid_argument naming the offending entry.
// n < 1 is rejected.
PeelResult peel(const Staircase& s, std::int64_t n);

enum class Relation {
  Dominates,    // lhs >> rhs
  DominatedBy,  // |lhs| << |rhs|
};

struct DominationFact {
  ClassExpr lhs;
  Relation relation = Relation::DominatedBy;
  ClassExpr rhs;          // unused when for_every_n is set
  bool for_every_n = false;  // |lhs| << [1,n,n,1] for every n >= 1
  std::string lemma;
  // Predicates the fact rests on; each can be re-evaluated with evaluate_predicate.
  std::vector<std::string> hypotheses;

  std::string claim() const;
};

struct DecompositionRecord {
  TorusKnot knot;
  std::int64_t k = 0;  // floor(q/p)
  std::int64_t r = 0;  // q mod p
  rules::Pattern branch = rules::Pattern::AnyRemainder;  // RemainderOne or AnyRemainder
  bool half_remainder = false;                            // 3 <= r < p/2 refinement applies
  Staircase staircase{};
  std::vector<std::int64_t> verified_prefix{};
  ClassExpr decomposition{};  // k*[1,p-1,p-1,1] + O(p,q)
  std::vector<DominationFact> facts{};
};

// [[T(p,q)]] = k*[1,p-1,p-1,1] + O for 4 <= p < q, gcd(p,q) = 1. The staircase
// prefix for the branch is checked against the actual staircase; a mismatch
// throws std::logic_error. Precondition failures throw std::invalid_argument.
DecompositionRecord decompose_torus(std::int64_t p, std::int64_t q);

}  // namespace concordance
