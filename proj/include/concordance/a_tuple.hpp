#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace concordance {

// Which of the three admissible shapes an a-tuple has:
//   1: every entry positive
//   2: n > 1, first n-1 positive, last entry < -1
//   3: n > 2, first n-2 positive, entry n-1 equal to -1, last entry negative
enum class TupleCondition { AllPositive = 1, NegativeTail = 2, MinusOneTail = 3 };

// Throws std::invalid_argument when the entries match none of the conditions
// (empty, zero entries, or a negative entry in a forbidden slot).
TupleCondition classify(std::span<const std::int64_t> entries);

// The numerical tuple a(C) of a complex with epsilon = 1.
class ATuple {
 public:
  explicit ATuple(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  TupleCondition condition() const { return condition_; }

  // "(a1,a2,...)"
  std::string to_string() const;

  bool operator==(const ATuple&) const = default;

 private:
  std::vector<std::int64_t> entries_;
  TupleCondition condition_;
};

enum class Comparison { MuchLess, MuchGreater, Unknown };

// Only the two comparison rules are applied, in either argument order:
//   a1 > a1' > 0                       =>  [C] << [C']
//   a1 = a1' > 0 and a2 > a2' > 0      =>  [C] >> [C']
// Tuples not of condition 1, and every other case, give Unknown.
Comparison compare(const ATuple& lhs, const ATuple& rhs);

std::string to_string(Comparison c);

// The epsilon invariant, with values -1, 0, +1.
class EpsilonSign {
 public:
  constexpr EpsilonSign() = default;
  explicit EpsilonSign(int value);

  int value() const { return value_; }
  EpsilonSign operator-() const { return EpsilonSign(-value_); }
  bool operator==(const EpsilonSign&) const = default;

 private:
  int value_ = 0;
};

}  // namespace concordance
