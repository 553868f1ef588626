#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "concordance/a_tuple.hpp"
#include "concordance/semigroup.hpp"

namespace concordance {

// St(b1,...,b2m): a palindromic, even-length vector of positive step lengths.
// The empty vector is the trivial complex of the unknot.
class Staircase {
 public:
  Staircase() = default;
  explicit Staircase(std::vector<std::int64_t> steps);

  // Run-length encoding of membership in <p,q> over [0, conductor): the
  // first run is the member run starting at 0, runs then alternate, and
  // the last run is the gap run ending at the Frobenius number.
  static Staircase from_torus_knot(const TorusKnot& knot);

  const std::vector<std::int64_t>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::int64_t operator[](std::size_t i) const { return steps_[i]; }

  std::int64_t total() const;
  // b2 + b4 + ... (the genus, for torus knots).
  std::int64_t even_sum() const;
  std::int64_t max_entry() const;

  std::string to_string() const;

  bool operator==(const Staircase&) const = default;

 private:
  std::vector<std::int64_t> steps_;
};

// Exponents 0 = alpha_0 < ... < alpha_2m with
// Delta(t) = sum_i (-1)^i t^{alpha_i}; alpha_j = b1 + ... + bj.
struct AlexanderExponents {
  std::vector<std::int64_t> alpha;
};

AlexanderExponents alexander_exponents(const Staircase& s);

// a(St(b)) = b. Throws std::invalid_argument for the empty staircase.
ATuple a_tuple(const Staircase& s);

// Every staircase entry of T(p,q) is at most p-1. Requires p >= 2.
bool max_entry_bound(const TorusKnot& knot);

bool has_prefix(const Staircase& s, std::span<const std::int64_t> pattern);

// Epsilon of a staircase class: +1 when nonempty, 0 for the trivial complex.
EpsilonSign epsilon(const Staircase& s);

}  // namespace concordance
