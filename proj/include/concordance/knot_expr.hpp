#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "concordance/upsilon.hpp"

namespace concordance {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses a knot expression:
//   expr := ["-"] term (("+" | "-") term)*
//   term := [uint "*"] "T(" uint "," uint ")"
// Whitespace is ignored. Coefficients of repeated knots are merged and
// cancelled terms dropped. The single token "0" is the empty sum.
// Throws ParseError on syntax errors and on invalid pairs (p >= q, gcd != 1).
TorusKnotSum parse_knot_expr(std::string_view text);

}  // namespace concordance
