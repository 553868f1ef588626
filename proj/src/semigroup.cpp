#include "concordance/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace concordance {

namespace {

// Keeps (p-1)(q-1) and 2pq comfortably inside int64.
constexpr std::int64_t kMaxGenerator = std::int64_t{1} << 30;

std::int64_t modular_inverse(std::int64_t a, std::int64_t m) {
  // Extended Euclid; assumes gcd(a, m) = 1 and m >= 1.
  std::int64_t old_r = a % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  std::int64_t inv = old_s % m;
  return inv < 0 ? inv + m : inv;
}

}  // namespace

TorusKnot::TorusKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p < 1) throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) + "): p must be positive");
  if (p >= q)
    throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) + "): p must be less than q");
  if (q > kMaxGenerator)
    throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) + "): q too large");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) + "): gcd(" + std::to_string(p) + "," +
                                std::to_string(q) + ") != 1");
}

std::string TorusKnot::to_string() const { return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

Semigroup::Semigroup(const TorusKnot& knot)
    : p_(knot.p()), q_(knot.q()), q_inverse_mod_p_(p_ == 1 ? 0 : modular_inverse(q_ % p_, p_)) {}

bool Semigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (p_ == 1) return true;
  // The least member congruent to n mod p is q*y with y = n * q^{-1} mod p.
  auto y = static_cast<std::int64_t>((static_cast<__int128>(n % p_) * q_inverse_mod_p_) % p_);
  return static_cast<__int128>(n) >= static_cast<__int128>(q_) * y;
}

std::vector<std::int64_t> Semigroup::gaps() const {
  std::vector<std::int64_t> out;
  if (p_ == 1) return out;
  if (conductor() > kMaxConductor) throw std::length_error("semigroup too large to enumerate");
  out.reserve(static_cast<std::size_t>(genus()));
  for (std::int64_t n = 0; n < conductor(); ++n)
    if (!contains(n)) out.push_back(n);
  return out;
}

std::int64_t Semigroup::counting(std::int64_t m) const {
  if (m <= 0) return 0;
  if (m >= conductor()) return m - genus();
  // Each residue class mod p contributes the members q*y, q*y + p, ... below m.
  std::int64_t total = 0;
  for (std::int64_t y = 0; y < p_; ++y) {
    std::int64_t start = q_ * y;
    if (start >= m) break;
    total += (m - start + p_ - 1) / p_;
  }
  return total;
}

}  // namespace concordance
