#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace concordance {

// Largest conductor (p-1)(q-1) for which the enumerating operations
// (staircase scan, Upsilon envelope) are attempted.
inline constexpr std::int64_t kMaxConductor = 20'000'000;

// The positive torus knot T(p,q), 1 <= p < q, gcd(p,q) = 1. p = 1 is the unknot.
class TorusKnot {
 public:
  TorusKnot(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_unknot() const { return p_ == 1; }

  std::int64_t conductor() const { return (p_ - 1) * (q_ - 1); }
  std::int64_t genus() const { return conductor() / 2; }

  // "T(p,q)"
  std::string to_string() const;

  auto operator<=>(const TorusKnot&) const = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// The numerical semigroup <p,q> = { px + qy : x,y >= 0 }.
class Semigroup {
 public:
  explicit Semigroup(const TorusKnot& knot);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t conductor() const { return (p_ - 1) * (q_ - 1); }
  std::int64_t genus() const { return conductor() / 2; }

  // O(1): n is a member iff n >= q*y where y = n * q^{-1} mod p.
  bool contains(std::int64_t n) const;

  // Sorted non-members in [0, conductor). Empty for p = 1.
  std::vector<std::int64_t> gaps() const;

  // #(S ∩ [0, m)).
  std::int64_t counting(std::int64_t m) const;

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t q_inverse_mod_p_;
};

}  // namespace concordance
