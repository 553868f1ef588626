#pragma once

// Brute-force reference implementations. None of these call into the
// library's semigroup, staircase or envelope code.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool member(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 0) return false;
  for (std::int64_t y = 0; y * q <= n; ++y)
    for (std::int64_t x = 0; x * p + y * q <= n; ++x)
      if (x * p + y * q == n) return true;
  return false;
}

inline std::vector<bool> membership_table(std::int64_t p, std::int64_t q, std::int64_t limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  for (std::int64_t y = 0; y * q < limit; ++y)
    for (std::int64_t x = 0; x * p + y * q < limit; ++x) in[static_cast<std::size_t>(x * p + y * q)] = true;
  return in;
}

inline std::vector<std::int64_t> staircase(std::int64_t p, std::int64_t q) {
  const std::int64_t c = (p - 1) * (q - 1);
  if (c == 0) return {};
  auto in = membership_table(p, q, c);
  std::vector<std::int64_t> runs{1};
  for (std::int64_t n = 1; n < c; ++n) {
    if (in[n] == in[n - 1]) ++runs.back();
    else runs.push_back(1);
  }
  return runs;
}

// Integer polynomial as exponent -> coefficient, zero coefficients dropped.
using Poly = std::map<std::int64_t, std::int64_t>;

inline Poly normalize(Poly f) {
  for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
  return f;
}

inline Poly multiply(const Poly& f, const Poly& g) {
  Poly out;
  for (auto [a, x] : f)
    for (auto [b, y] : g) out[a + b] += x * y;
  return normalize(out);
}

// Exact division by a monic divisor; the remainder must vanish.
inline Poly divide(Poly f, const Poly& g) {
  Poly quotient;
  const auto [dg, lead] = *g.rbegin();
  f = normalize(f);
  while (!f.empty() && f.rbegin()->first >= dg) {
    auto [df, cf] = *f.rbegin();
    std::int64_t c = cf / lead;
    quotient[df - dg] += c;
    for (auto [e, x] : g) f[df - dg + e] -= c * x;
    f = normalize(f);
  }
  if (!f.empty()) throw std::logic_error("inexact polynomial division");
  return normalize(quotient);
}

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
inline Poly torus_alexander(std::int64_t p, std::int64_t q) {
  Poly num = multiply({{p * q, 1}, {0, -1}}, {{1, 1}, {0, -1}});
  return divide(divide(num, {{p, 1}, {0, -1}}), {{q, 1}, {0, -1}});
}

// (1 - t) * sum of t^s over semigroup elements s, truncated once the
// series becomes t^c (1 - t)/(1 - t) = t^c.
inline Poly semigroup_alexander(std::int64_t p, std::int64_t q) {
  const std::int64_t c = (p - 1) * (q - 1);
  auto in = membership_table(p, q, c + 1);
  Poly out;
  for (std::int64_t s = 0; s < c; ++s)
    if (in[s]) {
      out[s] += 1;
      out[s + 1] -= 1;
    }
  out[c] += 1;
  return normalize(out);
}

// Upsilon(t) = max over m in [0, 2g] of (m - g) t - 2 #(S ∩ [0,m)), evaluated
// directly at one t.
inline mpq_class upsilon(std::int64_t p, std::int64_t q, const mpq_class& t) {
  const std::int64_t c = (p - 1) * (q - 1);
  const std::int64_t g = c / 2;
  if (g == 0) return 0;
  auto in = membership_table(p, q, c + 1);
  mpq_class best;
  std::int64_t count = 0;
  for (std::int64_t m = 0; m <= 2 * g; ++m) {
    mpq_class v = mpq_class(m - g) * t - 2 * count;
    if (m == 0 || v > best) best = v;
    if (in[m]) ++count;
  }
  return best;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t lo, std::int64_t hi) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = lo; p <= hi; ++p)
    for (std::int64_t q = p + 1; q <= hi; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

// Uniform rational in [0,2] with denominator below 1000.
inline mpq_class random_t(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 999);
  long d = den(rng);
  std::uniform_int_distribution<long> num(0, 2 * d);
  mpq_class t(num(rng), d);
  t.canonicalize();
  return t;
}

}  // namespace oracle
