#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "concordance/rational.hpp"

namespace concordance {

// A generator of a class expression: either the epsilon-class [b1,...,b2m]
// of a staircase, or the unnamed remainder O(p,q) left over when the
// (1,p-1)-blocks are split off the staircase of T(p,q).
struct ClassAtom {
  std::vector<std::int64_t> bracket;  // empty for remainders
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool is_remainder() const { return bracket.empty(); }
  std::string to_string() const;

  auto operator<=>(const ClassAtom&) const = default;
};

// A formal integer combination of class atoms, e.g. k*[1,p-1,p-1,1] + O(p,q).
class ClassExpr {
 public:
  ClassExpr() = default;

  // Requires a palindromic, even-length, positive vector.
  static ClassExpr bracket(std::vector<std::int64_t> steps);
  // [1,n,n,1]
  static ClassExpr block(std::int64_t n);
  static ClassExpr remainder(std::int64_t p, std::int64_t q);

  const std::map<ClassAtom, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ClassExpr operator-() const;
  friend ClassExpr operator+(ClassExpr a, const ClassExpr& b);
  friend ClassExpr operator-(ClassExpr a, const ClassExpr& b);
  friend ClassExpr operator*(const Integer& c, const ClassExpr& e);

  bool operator==(const ClassExpr&) const = default;

  // e.g. "2*[1,3,3,1] - O(4,9)"; the zero expression prints as "0".
  std::string to_string() const;

 private:
  void add(const ClassAtom& atom, const Integer& c);

  std::map<ClassAtom, Integer> terms_;
};

// Grammar: expr := ["+"|"-"] term (("+"|"-") term)*; term := factor ("*" factor)*;
// factor := uint | "[" uint ("," uint)* "]" | "O(" uint "," uint ")" | "(" expr ")".
// A term may contain at most one non-scalar factor. Throws std::invalid_argument.
ClassExpr parse_class_expr(std::string_view text);

}  // namespace concordance
