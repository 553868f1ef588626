#include "concordance/upsilon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace concordance {

TorusKnotSum::TorusKnotSum(const TorusKnot& knot, const Integer& coefficient) { add(knot, coefficient); }

void TorusKnotSum::add(const TorusKnot& knot, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(knot, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

TorusKnotSum TorusKnotSum::operator-() const {
  TorusKnotSum out = *this;
  for (auto& [knot, c] : out.terms_) c = -c;
  return out;
}

TorusKnotSum operator+(TorusKnotSum a, const TorusKnotSum& b) {
  for (const auto& [knot, c] : b.terms_) a.add(knot, c);
  return a;
}

TorusKnotSum operator-(TorusKnotSum a, const TorusKnotSum& b) {
  for (const auto& [knot, c] : b.terms_) a.add(knot, -c);
  return a;
}

TorusKnotSum operator*(const Integer& c, const TorusKnotSum& s) {
  TorusKnotSum out;
  if (c == 0) return out;
  for (const auto& [knot, coefficient] : s.terms_) out.terms_.emplace(knot, c * coefficient);
  return out;
}

std::string TorusKnotSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto emit = [&](const TorusKnot& knot, const Integer& c) {
    Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += knot.to_string();
  };
  for (const auto& [knot, c] : terms_)
    if (c > 0) emit(knot, c);
  for (const auto& [knot, c] : terms_)
    if (c < 0) emit(knot, c);
  return out;
}

TorusKnotSum three_torus_knot_sum(std::int64_t p, std::int64_t q, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  TorusKnot base(p, q);
  if (k > (std::int64_t{1} << 30) / q) throw std::invalid_argument("k too large");
  TorusKnotSum out(TorusKnot(q, k * q + p));
  out.add(base, -1);
  out.add(TorusKnot(q, q + 1), -Integer(k));
  return out;
}

PLFunction upsilon_torus(const TorusKnot& knot) {
  if (knot.is_unknot()) return PLFunction();
  if (knot.conductor() > kMaxConductor) throw std::length_error(knot.to_string() + " is too large to enumerate");

  struct Line {
    std::int64_t slope;
    std::int64_t intercept;
  };
  const Semigroup semigroup(knot);
  const std::int64_t g = semigroup.genus();

  // Slopes m - g strictly increase with m, so the upper hull is a single pass.
  std::vector<Line> hull;
  std::int64_t count = 0;  // I(m)
  for (std::int64_t m = 0; m <= 2 * g; ++m) {
    Line line{m - g, -2 * count};
    while (hull.size() >= 2) {
      const Line& a = hull[hull.size() - 2];
      const Line& b = hull.back();
      // b never rises above max(a, line) when a and line meet at or left of a and b.
      __int128 lhs = static_cast<__int128>(a.intercept - line.intercept) * (b.slope - a.slope);
      __int128 rhs = static_cast<__int128>(a.intercept - b.intercept) * (line.slope - a.slope);
      if (lhs > rhs) break;
      hull.pop_back();
    }
    hull.push_back(line);
    if (semigroup.contains(m)) ++count;
  }

  auto value = [](const Line& l, const Rational& t) { return Rational(t * l.slope + l.intercept); };

  std::vector<Rational> ts{Rational(0)};
  std::vector<Rational> vs;
  std::size_t active = 0;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Rational x(Integer(hull[i].intercept - hull[i + 1].intercept), Integer(hull[i + 1].slope - hull[i].slope));
    x.canonicalize();
    if (x <= 0) {
      active = i + 1;
      continue;
    }
    if (x >= 2) break;
    ts.push_back(x);
  }
  vs.push_back(value(hull[active], ts[0]));
  for (std::size_t j = 1; j < ts.size(); ++j) vs.push_back(value(hull[active + j - 1], ts[j]));
  const Line& last = hull[active + ts.size() - 1];
  ts.emplace_back(2);
  vs.push_back(value(last, ts.back()));
  return PLFunction(std::move(ts), std::move(vs));
}

PLFunction upsilon_of_sum(const TorusKnotSum& sum) {
  PLFunction out;
  for (const auto& [knot, c] : sum.terms()) out = out + c * upsilon_torus(knot);
  return out;
}

namespace {

PLFunction upsilon_of_pair(std::int64_t a, std::int64_t b) {
  if (std::min(a, b) == 1) return PLFunction();
  return upsilon_torus(TorusKnot(std::min(a, b), std::max(a, b)));
}

}  // namespace

bool check_recursion(std::int64_t q, std::int64_t p, std::int64_t k) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
  if (q > (std::int64_t{1} << 30) || p > (std::int64_t{1} << 30) || k > (std::int64_t{1} << 30) / q)
    throw std::invalid_argument("recursion arguments too large");
  PLFunction lhs = upsilon_of_pair(q, k * q + p);
  PLFunction rhs = upsilon_of_pair(p, q) + Integer(k) * upsilon_of_pair(q, q + 1);
  return lhs == rhs;
}

}  // namespace concordance
