#include "concordance/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace concordance {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer d(std::string{den});
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    out = Rational(Integer(std::string{num}), d);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    out = Rational(Integer(std::string{whole}) * scale + Integer(std::string{frac}), scale);
    out.canonicalize();
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number: " + std::string(text));
    out = Rational(Integer(std::string{s}));
  }
  return negative ? Rational(-out) : out;
}

}  // namespace concordance
