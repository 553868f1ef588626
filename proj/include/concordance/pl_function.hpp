#pragma once

#include <vector>

#include "concordance/rational.hpp"

namespace concordance {

// A continuous piecewise-linear function on [0,2] with rational breakpoints,
// stored in canonical form: the breakpoints start at 0, end at 2, strictly
// increase, and no interior breakpoint has equal left and right slopes.
// Two functions are equal iff their canonical forms are identical.
class PLFunction {
 public:
  // The zero function.
  PLFunction();
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  // Throws std::out_of_range for t outside [0,2].
  Rational operator()(const Rational& t) const;

  // Slope of each of the size()-1 segments, left to right.
  std::vector<Rational> slopes() const;

  bool is_zero() const;
  bool is_convex() const;

  PLFunction operator-() const;
  friend PLFunction operator+(const PLFunction& f, const PLFunction& g);
  friend PLFunction operator-(const PLFunction& f, const PLFunction& g);
  friend PLFunction operator*(const Integer& c, const PLFunction& f);

  bool operator==(const PLFunction& other) const;

 private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

}  // namespace concordance
