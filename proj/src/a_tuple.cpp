#include "concordance/a_tuple.hpp"

#include <algorithm>
#include <stdexcept>

namespace concordance {

namespace {

bool all_positive(std::span<const std::int64_t> s) {
  return std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v > 0; });
}

}  // namespace

TupleCondition classify(std::span<const std::int64_t> entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw std::invalid_argument("a-tuple must be nonempty");
  for (std::size_t i = 0; i < n; ++i)
    if (entries[i] == 0) throw std::invalid_argument("a-tuple entry " + std::to_string(i + 1) + " is zero");

  if (all_positive(entries)) return TupleCondition::AllPositive;
  if (n > 1 && all_positive(entries.first(n - 1)) && entries[n - 1] < -1) return TupleCondition::NegativeTail;
  if (n > 2 && all_positive(entries.first(n - 2)) && entries[n - 2] == -1 && entries[n - 1] < 0)
    return TupleCondition::MinusOneTail;

  auto bad = std::find_if(entries.begin(), entries.end(), [](std::int64_t v) { return v < 0; });
  throw std::invalid_argument("a-tuple has a negative entry in a forbidden slot (position " +
                              std::to_string(bad - entries.begin() + 1) + ")");
}

ATuple::ATuple(std::vector<std::int64_t> entries) : entries_(std::move(entries)), condition_(classify(entries_)) {}

std::string ATuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

Comparison compare(const ATuple& lhs, const ATuple& rhs) {
  if (lhs.condition() != TupleCondition::AllPositive || rhs.condition() != TupleCondition::AllPositive)
    return Comparison::Unknown;
  if (lhs[0] > rhs[0]) return Comparison::MuchLess;
  if (rhs[0] > lhs[0]) return Comparison::MuchGreater;
  if (lhs.size() < 2 || rhs.size() < 2) return Comparison::Unknown;
  if (lhs[1] > rhs[1]) return Comparison::MuchGreater;
  if (rhs[1] > lhs[1]) return Comparison::MuchLess;
  return Comparison::Unknown;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::MuchLess: return "<<";
    case Comparison::MuchGreater: return ">>";
    case Comparison::Unknown: break;
  }
  return "unknown";
}

EpsilonSign::EpsilonSign(int value) : value_(value) {
  if (value < -1 || value > 1) throw std::invalid_argument("epsilon must be -1, 0 or 1");
}

}  // namespace concordance
