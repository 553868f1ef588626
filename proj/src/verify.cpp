#include "concordance/verify.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "concordance/class_expr.hpp"
#include "concordance/knot_expr.hpp"
#include "concordance/order.hpp"
#include "concordance/upsilon.hpp"

namespace concordance {

using nlohmann::json;

namespace {

constexpr std::int64_t kMaxCheckedConductor = 5'000'000;

// Staircase of T(a,b) from a double-loop membership test, independent of
// Semigroup::contains and Staircase::from_torus_knot.
Staircase brute_force_staircase(std::int64_t a, std::int64_t b) {
  if (a < 2 || b <= a || std::gcd(a, b) != 1) throw std::invalid_argument("not a nontrivial torus knot");
  const std::int64_t conductor = (a - 1) * (b - 1);
  if (conductor > kMaxCheckedConductor) throw std::invalid_argument("torus knot too large to check");
  auto member = [&](std::int64_t n) {
    for (std::int64_t y = 0; y * b <= n; ++y)
      if ((n - y * b) % a == 0) return true;
    return false;
  };
  std::vector<std::int64_t> runs;
  bool in_run_of_members = true;
  std::int64_t length = 0;
  for (std::int64_t n = 0; n < conductor; ++n) {
    if (member(n) == in_run_of_members) {
      ++length;
    } else {
      runs.push_back(length);
      in_run_of_members = !in_run_of_members;
      length = 1;
    }
  }
  runs.push_back(length);
  return Staircase(std::move(runs));
}

class IntegerExpr {
 public:
  explicit IntegerExpr(std::string_view text) : text_(text) {}

  // Parses "lhs REL rhs" and evaluates it.
  bool relation() {
    Integer lhs = expr();
    skip_space();
    std::string op;
    if (consume("<=")) op = "<=";
    else if (consume(">=")) op = ">=";
    else if (consume("<")) op = "<";
    else if (consume(">")) op = ">";
    else if (consume("=")) op = "=";
    else fail("expected a relation");
    Integer rhs = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (op == "<=") return lhs <= rhs;
    if (op == ">=") return lhs >= rhs;
    if (op == "<") return lhs < rhs;
    if (op == ">") return lhs > rhs;
    return lhs == rhs;
  }

 private:
  Integer expr() {
    Integer acc = term();
    while (true) {
      skip_space();
      if (consume("+")) acc += term();
      else if (consume("-")) acc -= term();
      else return acc;
    }
  }

  Integer term() {
    Integer acc = factor();
    while (true) {
      skip_space();
      if (!consume("*")) return acc;
      acc *= factor();
    }
  }

  Integer factor() {
    skip_space();
    if (consume("-")) return -factor();
    if (consume("(")) {
      Integer v = expr();
      expect(")");
      return v;
    }
    if (consume("gcd(")) {
      Integer a = expr();
      expect(",");
      Integer b = expr();
      expect(")");
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return g;
    }
    if (consume("max(")) {
      Staircase s = staircase_call();
      expect(")");
      return Integer(std::to_string(s.max_entry()));
    }
    if (consume("peel(")) {
      Staircase s = staircase_call();
      expect(",");
      std::int64_t n = small();
      expect(")");
      return Integer(std::to_string(peel(s, n).count));
    }
    return digits();
  }

  Staircase staircase_call() {
    skip_space();
    if (!consume("staircase(")) fail("expected staircase(p,q)");
    std::int64_t a = small();
    expect(",");
    std::int64_t b = small();
    expect(")");
    return brute_force_staircase(a, b);
  }

  std::int64_t small() {
    Integer v = digits();
    if (!v.fits_slong_p()) fail("integer out of range");
    return v.get_si();
  }

  Integer digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("predicate '" + std::string(text_) + "': " + message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw std::invalid_argument("bad integer");
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw std::invalid_argument("expected [..]");
  std::vector<std::int64_t> out;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    out.push_back(parse_int(item));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("expected a,b");
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

bool evaluate_predicate(std::string_view text) {
  constexpr std::string_view kStartsWith = ") starts with ";
  if (starts_with(text, "staircase(")) {
    auto at = text.find(kStartsWith);
    if (at == std::string_view::npos) throw std::invalid_argument("malformed staircase predicate");
    auto [a, b] = parse_pair(text.substr(10, at - 10));
    auto pattern = parse_int_list(text.substr(at + kStartsWith.size()));
    return has_prefix(brute_force_staircase(a, b), pattern);
  }
  if (starts_with(text, "upsilon(")) {
    if (!ends_with(text, ") = 0")) throw std::invalid_argument("malformed upsilon predicate");
    auto expr = text.substr(8, text.size() - 8 - 5);
    return upsilon_of_sum(parse_knot_expr(expr)).is_zero();
  }
  if (starts_with(text, "recursion(")) {
    if (!ends_with(text, ") holds")) throw std::invalid_argument("malformed recursion predicate");
    auto body = text.substr(10, text.size() - 10 - 7);
    auto first = body.find(',');
    if (first == std::string_view::npos) throw std::invalid_argument("malformed recursion predicate");
    auto [p, k] = parse_pair(body.substr(first + 1));
    auto q = parse_int(body.substr(0, first));
    return check_recursion(q, p, k);
  }
  if (text.find('[') != std::string_view::npos || text.find("O(") != std::string_view::npos) {
    auto eq = text.find(" = ");
    if (eq == std::string_view::npos || text.find(" = ", eq + 1) != std::string_view::npos)
      throw std::invalid_argument("class equation needs exactly one ' = '");
    return parse_class_expr(text.substr(0, eq)) == parse_class_expr(text.substr(eq + 3));
  }
  return IntegerExpr(text).relation();
}

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.failures.push_back(std::move(message));
  };

  std::unordered_set<std::string> established;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const Step& step = cert.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + " (" + step.lemma + ")";
    rules::Instance expected;
    try {
      expected = rules::instantiate(step.lemma, step.params);
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
      continue;
    }
    bool valid = true;
    if (expected.kind != step.kind) {
      fail(where + ": must be labelled " + rules::to_string(expected.kind));
      valid = false;
    }
    if (expected.claim != step.claim) {
      fail(where + ": claim does not follow from the rule; expected \"" + expected.claim + "\"");
      valid = false;
    }
    if (expected.hypotheses.size() != step.hypotheses.size()) {
      fail(where + ": expected " + std::to_string(expected.hypotheses.size()) + " hypotheses, found " +
           std::to_string(step.hypotheses.size()));
      continue;
    }
    for (std::size_t j = 0; j < step.hypotheses.size(); ++j) {
      const auto& want = expected.hypotheses[j];
      const auto& got = step.hypotheses[j];
      if (want.text != got) {
        fail(where + ": hypothesis " + std::to_string(j + 1) + " should read \"" + want.text + "\"");
        valid = false;
        continue;
      }
      if (want.premise) {
        if (!established.contains(got)) {
          fail(where + ": premise not established by an earlier step: \"" + got + "\"");
          valid = false;
        }
        continue;
      }
      try {
        if (!evaluate_predicate(got)) {
          fail(where + ": hypothesis is false: \"" + got + "\"");
          valid = false;
        }
      } catch (const std::exception& e) {
        fail(where + ": cannot evaluate \"" + got + "\": " + e.what());
        valid = false;
      }
    }
    if (valid) established.insert(step.claim);
  }

  try {
    std::string statement = rules::goal_statement(cert.theorem, cert.params);
    if (statement != cert.goal) fail("goal should read \"" + statement + "\"");
  } catch (const std::exception& e) {
    fail(std::string("goal: ") + e.what());
  }
  if (!established.contains(cert.goal)) fail("goal is not established by any step");
  if (cert.verdict != "verified") fail("verdict must be \"verified\"");
  return report;
}

namespace {

void merge(VerificationReport& into, const VerificationReport& from, const std::string& prefix) {
  if (from.ok) return;
  into.ok = false;
  for (const auto& f : from.failures) into.failures.push_back(prefix + f);
}

VerificationReport verify_nested(const json& doc, const std::string& expected_theorem, const json& expected_params,
                                 const std::string& prefix) {
  VerificationReport report;
  try {
    Certificate cert = certificate_from_json(doc);
    merge(report, verify_certificate(cert), prefix);
    if (cert.theorem != expected_theorem) merge(report, {false, {"theorem should be " + expected_theorem}}, prefix);
    if (!expected_params.is_null() && cert.params != expected_params)
      merge(report, {false, {"params do not match the enclosing document"}}, prefix);
  } catch (const std::exception& e) {
    merge(report, {false, {e.what()}}, prefix);
  }
  return report;
}

VerificationReport verify_family(const json& doc) {
  VerificationReport report;
  for (const auto& [key, value] : doc.items())
    if (key != "members" && key != "independence") merge(report, {false, {"unexpected field \"" + key + "\""}}, "");
  merge(report, verify_nested(doc.at("independence"), "family", nullptr, "independence: "), "");

  const json& members = doc.at("members");
  const json& listed = doc.at("independence").value("params", json::object()).value("members", json::array());
  if (!members.is_array() || members.size() != listed.size()) {
    merge(report, {false, {"member list does not match the independence certificate"}}, "");
    return report;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const json& m = members[i];
    const std::string where = "member " + std::to_string(i + 1) + ": ";
    try {
      for (const auto& [key, value] : m.items()) {
        static const std::unordered_set<std::string> known{
            "index", "p", "q", "k", "knot", "connected_sum", "upsilon_vanishes", "proposition", "upper_bound"};
        if (!known.contains(key)) throw std::invalid_argument("unexpected field \"" + key + "\"");
      }
      FamilyMember fm{m.at("p").get<std::int64_t>(), m.at("q").get<std::int64_t>(), m.at("k").get<std::int64_t>()};
      if (m.at("index").get<std::int64_t>() != static_cast<std::int64_t>(i + 1))
        throw std::invalid_argument("index out of sequence");
      if (listed[i] != json::array({fm.p, fm.q, fm.k}))
        throw std::invalid_argument("p, q, k differ from the independence certificate");
      if (m.at("knot").get<std::string>() != rules::family_knot(fm.p, fm.q, fm.k))
        throw std::invalid_argument("knot text does not match p, q, k");
      if (m.at("connected_sum").get<std::string>() != connected_sum_notation(fm))
        throw std::invalid_argument("connected_sum text does not match p, q, k");
      if (m.at("upsilon_vanishes") != true) throw std::invalid_argument("upsilon_vanishes must be true");
      const json params = rules::member_params(fm.p, fm.q, fm.k);
      merge(report, verify_nested(m.at("proposition"), "three_torus_knots", params, where + "proposition: "), "");
      merge(report, verify_nested(m.at("upper_bound"), "upper_bound", params, where + "upper_bound: "), "");
    } catch (const std::exception& e) {
      merge(report, {false, {e.what()}}, where);
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_document(const json& doc) {
  if (!doc.is_object()) return {false, {"document must be a JSON object"}};
  if (doc.contains("steps")) return verify_nested(doc, doc.value("theorem", ""), nullptr, "");
  if (doc.contains("independence") && doc.contains("members")) return verify_family(doc);
  if (doc.contains("proposition") || doc.contains("upper_bound")) {
    VerificationReport report;
    json params = nullptr;
    for (const auto& [key, value] : doc.items()) {
      if (key == "proposition") {
        merge(report, verify_nested(value, "three_torus_knots", params, "proposition: "), "");
      } else if (key == "upper_bound") {
        merge(report, verify_nested(value, "upper_bound", params, "upper_bound: "), "");
      } else {
        merge(report, {false, {"unexpected field \"" + key + "\""}}, "");
        continue;
      }
      if (params.is_null() && value.is_object() && value.contains("params")) params = value.at("params");
    }
    return report;
  }
  return {false, {"not a certificate document"}};
}

}  // namespace concordance
