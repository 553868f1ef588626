#include "concordance/order.hpp"

#include <numeric>
#include <stdexcept>

namespace concordance {

PeelResult peel(const Staircase& s, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("peel needs n >= 1, got " + std::to_string(n));
  const auto& b = s.steps();
  std::size_t k = 0;
  // Palindromicity makes the (n,1)^k suffix match whenever the prefix does.
  while (4 * (k + 1) <= b.size() && b[2 * k] == 1 && b[2 * k + 1] == n) ++k;
  for (std::size_t i = 2 * k; i < b.size() - 2 * k; ++i) {
    if (b[i] > n)
      throw std::invalid_argument("entry b" + std::to_string(i + 1) + " = " + std::to_string(b[i]) +
                                  " exceeds n = " + std::to_string(n));
  }
  std::vector<std::int64_t> middle(b.begin() + static_cast<std::ptrdiff_t>(2 * k),
                                   b.end() - static_cast<std::ptrdiff_t>(2 * k));
  return {static_cast<std::int64_t>(k), Staircase(std::move(middle))};
}

std::string DominationFact::claim() const {
  const std::string left = lhs.to_string();
  if (for_every_n) return "|" + left + "| << [1,n,n,1] for every n >= 1";
  if (relation == Relation::Dominates) return left + " >> " + rhs.to_string();
  return "|" + left + "| << " + rhs.to_string();
}

namespace {

std::vector<std::string> predicates_of(const std::vector<rules::Instance>& instances) {
  std::vector<std::string> out;
  for (const auto& inst : instances)
    for (const auto& h : inst.hypotheses)
      if (!h.premise) out.push_back(h.text);
  return out;
}

}  // namespace

DecompositionRecord decompose_torus(std::int64_t p, std::int64_t q) {
  if (p < 4) throw std::invalid_argument("decomposition needs p >= 4, got p = " + std::to_string(p));
  if (q <= p) throw std::invalid_argument("decomposition needs p < q");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("decomposition needs gcd(p,q) = 1, got gcd(" + std::to_string(p) + "," +
                                std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));

  DecompositionRecord rec{.knot = TorusKnot(p, q)};
  rec.k = q / p;
  rec.r = q % p;
  if (rec.r == 0) throw std::invalid_argument("decomposition needs q mod p != 0");
  rec.branch = rec.r == 1 ? rules::Pattern::RemainderOne : rules::Pattern::AnyRemainder;
  rec.half_remainder = rec.r >= 3 && 2 * rec.r < p;
  rec.staircase = Staircase::from_torus_knot(rec.knot);

  const auto strongest = rec.half_remainder ? rules::Pattern::HalfRemainder : rec.branch;
  rec.verified_prefix = rules::pattern_prefix(p, q, strongest);
  if (!has_prefix(rec.staircase, rec.verified_prefix))
    throw std::logic_error("staircase of " + rec.knot.to_string() + " does not start with " +
                           rules::bracket(rec.verified_prefix));
  if (rec.staircase.max_entry() > p - 1)
    throw std::logic_error("staircase of " + rec.knot.to_string() + " has an entry above p-1");
  if (peel(rec.staircase, p - 1).count != rec.k)
    throw std::logic_error("splitting " + rec.knot.to_string() + " does not peel off k blocks");

  rec.decomposition = Integer(rec.k) * ClassExpr::block(p - 1) + ClassExpr::remainder(p, q);

  auto structural = [&](rules::Pattern pattern) {
    return predicates_of({rules::instantiate("staircase_prefix", rules::knot_params(p, q, pattern)),
                          rules::instantiate("split", rules::knot_params(p, q, pattern))});
  };
  const ClassExpr o = ClassExpr::remainder(p, q);
  if (rec.branch == rules::Pattern::RemainderOne) {
    rec.facts.push_back({o, Relation::DominatedBy, {}, true, "remainder_one", structural(rec.branch)});
  } else {
    rec.facts.push_back(
        {o, Relation::DominatedBy, ClassExpr::block(p - 1), false, "any_remainder", structural(rec.branch)});
  }
  if (rec.half_remainder) {
    rec.facts.push_back({o, Relation::Dominates, ClassExpr::block(rec.r - 1), false, "half_remainder",
                         structural(rules::Pattern::HalfRemainder)});
  }
  return rec;
}

}  // namespace concordance
