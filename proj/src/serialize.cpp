#include "concordance/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace concordance {

using nlohmann::json;

json to_json(const PLFunction& f) {
  json breakpoints = json::array(), values = json::array();
  for (const auto& t : f.breakpoints()) breakpoints.push_back(to_string(t));
  for (const auto& v : f.values()) values.push_back(to_string(v));
  return {{"breakpoints", breakpoints}, {"values", values}};
}

PLFunction pl_function_from_json(const json& doc) {
  if (!doc.is_object() || doc.size() != 2 || !doc.contains("breakpoints") || !doc.contains("values"))
    throw std::invalid_argument("expected {\"breakpoints\": [...], \"values\": [...]}");
  auto read = [](const json& list) {
    if (!list.is_array()) throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& item : list) {
      if (!item.is_string()) throw std::invalid_argument("rationals are written as strings");
      out.push_back(parse_rational(item.get<std::string>()));
    }
    return out;
  };
  return PLFunction(read(doc.at("breakpoints")), read(doc.at("values")));
}

std::string to_csv(const PLFunction& f) {
  std::string out = "t,value\n";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
    out += to_string(f.breakpoints()[i]) + "," + to_string(f.values()[i]) + "\n";
  return out;
}

std::string to_svg(const PLFunction& f, const std::string& title) {
  constexpr double kWidth = 800, kHeight = 400, kMargin = 20;
  double low = 0, high = 0;
  for (const auto& v : f.values()) {
    low = std::min(low, v.get_d());
    high = std::max(high, v.get_d());
  }
  const double span = high - low > 0 ? high - low : 1;
  const double scale = (kHeight - 2 * kMargin) / span;
  auto y = [&](double v) { return kMargin + (high - v) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\" width=\"800\" height=\"400\">\n";
  std::string escaped;
  for (char c : title) {
    if (c == '<') escaped += "&lt;";
    else if (c == '>') escaped += "&gt;";
    else if (c == '&') escaped += "&amp;";
    else escaped += c;
  }
  svg << "  <title>" << escaped << "</title>\n";
  svg << "  <line x1=\"0\" y1=\"" << y(0) << "\" x2=\"" << kWidth << "\" y2=\"" << y(0)
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    if (i) svg << ' ';
    svg << 400 * f.breakpoints()[i].get_d() << ',' << y(f.values()[i].get_d());
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

json staircase_report(const TorusKnot& knot) {
  Staircase s = Staircase::from_torus_knot(knot);
  json report = {{"knot", knot.to_string()},
                 {"p", knot.p()},
                 {"q", knot.q()},
                 {"genus", knot.genus()},
                 {"staircase", s.steps()},
                 {"alexander_exponents", alexander_exponents(s).alpha}};
  report["a_tuple"] = s.empty() ? json(nullptr) : json(s.steps());
  return report;
}

}  // namespace concordance
