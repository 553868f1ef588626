#include "concordance/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace concordance {

namespace {

const Rational kZero(0);
const Rational kTwo(2);

}  // namespace

PLFunction::PLFunction() : breakpoints_{kZero, kTwo}, values_{kZero, kZero} {}

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size()) throw std::invalid_argument("breakpoint/value count mismatch");
  if (breakpoints_.size() < 2) throw std::invalid_argument("need at least the breakpoints 0 and 2");
  if (breakpoints_.front() != kZero || breakpoints_.back() != kTwo)
    throw std::invalid_argument("domain must be exactly [0,2]");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw std::invalid_argument("breakpoints must strictly increase");
  canonicalize();
}

void PLFunction::canonicalize() {
  std::vector<Rational> ts, vs;
  ts.reserve(breakpoints_.size());
  vs.reserve(values_.size());
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    // Drop the previous point while it is collinear with its neighbours.
    while (ts.size() >= 2) {
      const auto n = ts.size();
      Rational left = (vs[n - 1] - vs[n - 2]) * (breakpoints_[i] - ts[n - 1]);
      Rational right = (values_[i] - vs[n - 1]) * (ts[n - 1] - ts[n - 2]);
      if (left != right) break;
      ts.pop_back();
      vs.pop_back();
    }
    ts.push_back(breakpoints_[i]);
    vs.push_back(values_[i]);
  }
  breakpoints_ = std::move(ts);
  values_ = std::move(vs);
}

Rational PLFunction::operator()(const Rational& t) const {
  if (t < kZero || t > kTwo) throw std::out_of_range("t = " + to_string(t) + " is outside [0,2]");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (breakpoints_[i] == t) return values_[i];
  const Rational& t0 = breakpoints_[i - 1];
  const Rational& t1 = breakpoints_[i];
  Rational out = values_[i - 1] + (values_[i] - values_[i - 1]) * (t - t0) / (t1 - t0);
  return out;
}

std::vector<Rational> PLFunction::slopes() const {
  std::vector<Rational> out;
  out.reserve(breakpoints_.size() - 1);
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    out.emplace_back((values_[i] - values_[i - 1]) / (breakpoints_[i] - breakpoints_[i - 1]));
  return out;
}

bool PLFunction::is_zero() const { return breakpoints_.size() == 2 && values_[0] == 0 && values_[1] == 0; }

bool PLFunction::is_convex() const {
  auto s = slopes();
  return std::is_sorted(s.begin(), s.end());
}

PLFunction PLFunction::operator-() const {
  PLFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> ts;
  ts.reserve(f.breakpoints_.size() + g.breakpoints_.size());
  std::set_union(f.breakpoints_.begin(), f.breakpoints_.end(), g.breakpoints_.begin(), g.breakpoints_.end(),
                 std::back_inserter(ts));
  std::vector<Rational> vs;
  vs.reserve(ts.size());
  for (const auto& t : ts) vs.emplace_back(f(t) + g(t));
  return PLFunction(std::move(ts), std::move(vs));
}

PLFunction operator-(const PLFunction& f, const PLFunction& g) { return f + (-g); }

PLFunction operator*(const Integer& c, const PLFunction& f) {
  if (c == 0) return PLFunction();
  PLFunction out = f;
  for (auto& v : out.values_) v *= c;
  return out;
}

bool PLFunction::operator==(const PLFunction& other) const {
  return breakpoints_ == other.breakpoints_ && values_ == other.values_;
}

}  // namespace concordance
