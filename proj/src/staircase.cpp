#include "concordance/staircase.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace concordance {

Staircase::Staircase(std::vector<std::int64_t> steps) : steps_(std::move(steps)) {
  if (steps_.size() % 2 != 0) throw std::invalid_argument("staircase must have even length");
  const std::size_t n = steps_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (steps_[i] < 1)
      throw std::invalid_argument("staircase entry b" + std::to_string(i + 1) + " = " + std::to_string(steps_[i]) +
                                  " is not positive");
    if (steps_[i] != steps_[n - 1 - i])
      throw std::invalid_argument("staircase is not palindromic at b" + std::to_string(i + 1));
  }
}

Staircase Staircase::from_torus_knot(const TorusKnot& knot) {
  if (knot.is_unknot()) return {};
  if (knot.conductor() > kMaxConductor) throw std::length_error(knot.to_string() + " is too large to enumerate");
  const Semigroup s(knot);
  std::vector<std::int64_t> runs;
  bool current = true;
  std::int64_t length = 0;
  for (std::int64_t n = 0; n < s.conductor(); ++n) {
    if (s.contains(n) == current) {
      ++length;
    } else {
      runs.push_back(length);
      current = !current;
      length = 1;
    }
  }
  runs.push_back(length);
  return Staircase(std::move(runs));
}

std::int64_t Staircase::total() const { return std::accumulate(steps_.begin(), steps_.end(), std::int64_t{0}); }

std::int64_t Staircase::even_sum() const {
  std::int64_t sum = 0;
  for (std::size_t i = 1; i < steps_.size(); i += 2) sum += steps_[i];
  return sum;
}

std::int64_t Staircase::max_entry() const {
  return steps_.empty() ? 0 : *std::max_element(steps_.begin(), steps_.end());
}

std::string Staircase::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(steps_[i]);
  }
  return out + ")";
}

AlexanderExponents alexander_exponents(const Staircase& s) {
  AlexanderExponents out;
  out.alpha.reserve(s.size() + 1);
  out.alpha.push_back(0);
  for (auto b : s.steps()) out.alpha.push_back(out.alpha.back() + b);
  return out;
}

ATuple a_tuple(const Staircase& s) {
  if (s.empty()) throw std::invalid_argument("a-tuple is undefined for the trivial staircase (epsilon = 0)");
  return ATuple(s.steps());
}

bool max_entry_bound(const TorusKnot& knot) {
  if (knot.is_unknot()) throw std::invalid_argument("max_entry_bound requires p >= 2");
  return Staircase::from_torus_knot(knot).max_entry() <= knot.p() - 1;
}

bool has_prefix(const Staircase& s, std::span<const std::int64_t> pattern) {
  if (pattern.size() > s.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), s.steps().begin());
}

EpsilonSign epsilon(const Staircase& s) { return EpsilonSign(s.empty() ? 0 : 1); }

}  // namespace concordance
