#include "concordance/class_expr.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "concordance/staircase.hpp"

namespace concordance {

std::string ClassAtom::to_string() const {
  if (is_remainder()) return "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
  std::string out = "[";
  for (std::size_t i = 0; i < bracket.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(bracket[i]);
  }
  return out + "]";
}

ClassExpr ClassExpr::bracket(std::vector<std::int64_t> steps) {
  if (steps.empty()) throw std::invalid_argument("empty bracket");
  Staircase validated(steps);
  ClassExpr out;
  out.add(ClassAtom{validated.steps(), 0, 0}, 1);
  return out;
}

ClassExpr ClassExpr::block(std::int64_t n) { return bracket({1, n, n, 1}); }

ClassExpr ClassExpr::remainder(std::int64_t p, std::int64_t q) {
  ClassExpr out;
  out.add(ClassAtom{{}, p, q}, 1);
  return out;
}

void ClassExpr::add(const ClassAtom& atom, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(atom, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassExpr ClassExpr::operator-() const { return Integer(-1) * *this; }

ClassExpr operator+(ClassExpr a, const ClassExpr& b) {
  for (const auto& [atom, c] : b.terms_) a.add(atom, c);
  return a;
}

ClassExpr operator-(ClassExpr a, const ClassExpr& b) {
  for (const auto& [atom, c] : b.terms_) a.add(atom, -c);
  return a;
}

ClassExpr operator*(const Integer& c, const ClassExpr& e) {
  ClassExpr out;
  for (const auto& [atom, coefficient] : e.terms_) out.add(atom, c * coefficient);
  return out;
}

std::string ClassExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [atom, c] : terms_) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Integer magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += atom.to_string();
  }
  return out;
}

namespace {

struct Value {
  bool scalar = true;
  Integer number = 0;
  ClassExpr expr;
};

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) : text_(text) {}

  ClassExpr parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (v.scalar) {
      if (v.number != 0) fail("expression is a nonzero scalar, not a class");
      return {};
    }
    return v.expr;
  }

 private:
  Value expr() {
    skip_space();
    int sign = 1;
    if (peek_is('-') || peek_is('+')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    Value acc = term();
    if (sign < 0) negate(acc);
    while (true) {
      skip_space();
      if (!peek_is('+') && !peek_is('-')) break;
      bool minus = text_[pos_] == '-';
      ++pos_;
      Value rhs = term();
      if (minus) negate(rhs);
      acc = sum(acc, rhs);
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    while (true) {
      skip_space();
      if (!peek_is('*')) break;
      ++pos_;
      Value rhs = factor();
      acc = product(acc, rhs);
    }
    return acc;
  }

  Value factor() {
    skip_space();
    if (peek_is('(')) {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (peek_is('[')) {
      ++pos_;
      std::vector<std::int64_t> entries{number()};
      while (true) {
        skip_space();
        if (peek_is(']')) break;
        expect(',');
        entries.push_back(number());
      }
      ++pos_;
      Value v;
      v.scalar = false;
      try {
        v.expr = ClassExpr::bracket(std::move(entries));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      return v;
    }
    if (peek_is('O')) {
      ++pos_;
      expect('(');
      std::int64_t p = number();
      expect(',');
      std::int64_t q = number();
      expect(')');
      Value v;
      v.scalar = false;
      v.expr = ClassExpr::remainder(p, q);
      return v;
    }
    Value v;
    v.number = number();
    return v;
  }

  static void negate(Value& v) {
    if (v.scalar)
      v.number = -v.number;
    else
      v.expr = -v.expr;
  }

  Value sum(const Value& a, const Value& b) {
    if (a.scalar && b.scalar) return Value{true, a.number + b.number, {}};
    if (a.scalar && a.number == 0) return b;
    if (b.scalar && b.number == 0) return a;
    if (a.scalar || b.scalar) fail("cannot add a scalar to a class");
    return Value{false, 0, a.expr + b.expr};
  }

  Value product(const Value& a, const Value& b) {
    if (a.scalar && b.scalar) return Value{true, a.number * b.number, {}};
    if (!a.scalar && !b.scalar) fail("cannot multiply two classes");
    return a.scalar ? Value{false, 0, a.number * b.expr} : Value{false, 0, b.number * a.expr};
  }

  std::int64_t number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer out of range");
    return value;
  }

  void expect(char c) {
    skip_space();
    if (!peek_is(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("class expression, position " + std::to_string(pos_) + ": " + message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassExpr parse_class_expr(std::string_view text) { return ClassParser(text).parse(); }

}  // namespace concordance
