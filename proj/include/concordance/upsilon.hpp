#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "concordance/pl_function.hpp"
#include "concordance/rational.hpp"
#include "concordance/semigroup.hpp"

namespace concordance {

// A formal integer combination of torus knots; negative coefficients are
// mirrors. Zero coefficients are never stored.
class TorusKnotSum {
 public:
  TorusKnotSum() = default;
  TorusKnotSum(const TorusKnot& knot, const Integer& coefficient = 1);

  void add(const TorusKnot& knot, const Integer& coefficient);

  const std::map<TorusKnot, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  TorusKnotSum operator-() const;
  friend TorusKnotSum operator+(TorusKnotSum a, const TorusKnotSum& b);
  friend TorusKnotSum operator-(TorusKnotSum a, const TorusKnotSum& b);
  friend TorusKnotSum operator*(const Integer& c, const TorusKnotSum& s);

  bool operator==(const TorusKnotSum&) const = default;

  // Canonical, parseable text: positive terms first, then negative ones,
  // each group ordered by (p,q); e.g. "T(9,13) - T(4,9) - T(9,10)".
  // The empty sum prints as "0".
  std::string to_string() const;

 private:
  std::map<TorusKnot, Integer> terms_;
};

// T(q, kq+p) - T(p,q) - k T(q,q+1). Requires gcd(p,q) = 1 and 1 <= p < q, k >= 1.
TorusKnotSum three_torus_knot_sum(std::int64_t p, std::int64_t q, std::int64_t k);

// Upsilon of an L-space torus knot as the upper envelope
//   max over m in [0, 2g] of  (m - g) t - 2 I(m),
// where I(m) = #(<p,q> ∩ [0,m)). Equivalently -2 min_m (I(m) + (t/2)(g - m)).
PLFunction upsilon_torus(const TorusKnot& knot);

PLFunction upsilon_of_sum(const TorusKnotSum& sum);

// Upsilon(T(q,kq+p)) == Upsilon(T(p,q)) + k Upsilon(T(q,q+1)), compared exactly.
// Pairs are unordered (T(a,b) = T(b,a)); either generator equal to 1 is the unknot.
// Throws std::invalid_argument for non-coprime or non-positive p, q, or k < 0.
bool check_recursion(std::int64_t q, std::int64_t p, std::int64_t k);

}  // namespace concordance
