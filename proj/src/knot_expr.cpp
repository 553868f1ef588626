#include "concordance/knot_expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>

namespace concordance {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TorusKnotSum parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return {};
      pos_ = save;
    }
    TorusKnotSum sum;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    term(sum, sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      term(sum, c == '-' ? -1 : 1);
    }
    return sum;
  }

 private:
  void term(TorusKnotSum& sum, int sign) {
    skip_space();
    Integer coefficient = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Integer(digits());
      expect('*');
    }
    expect('T');
    expect('(');
    std::size_t knot_pos = pos_;
    std::int64_t p = small_uint();
    expect(',');
    std::int64_t q = small_uint();
    expect(')');
    try {
      sum.add(TorusKnot(p, q), sign * coefficient);
    } catch (const std::invalid_argument& e) {
      throw ParseError(knot_pos, e.what());
    }
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t small_uint() {
    std::size_t start = pos_;
    std::string d = digits();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc{} || ptr != d.data() + d.size()) throw ParseError(start, "integer out of range: " + d);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "', found end of input");
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TorusKnotSum parse_knot_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace concordance
