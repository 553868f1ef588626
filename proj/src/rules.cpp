#include "concordance/rules.hpp"

#include <set>
#include <stdexcept>

#include "concordance/staircase.hpp"
#include "concordance/upsilon.hpp"

namespace concordance::rules {

using nlohmann::json;

namespace {

constexpr std::int64_t kMaxParam = std::int64_t{1} << 30;

// Reads a rule's parameter object, rejecting missing, extra and non-integer fields.
class ParamReader {
 public:
  explicit ParamReader(const json& params) : params_(params) {
    if (!params_.is_object()) throw std::invalid_argument("rule parameters must be an object");
  }

  std::int64_t integer(const std::string& key) { return bounded(field(key), key); }

  std::string text(const std::string& key) {
    const json& v = field(key);
    if (!v.is_string()) throw std::invalid_argument("parameter '" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::vector<std::int64_t> list(const std::string& key) { return list_of(field(key), key); }

  std::vector<std::vector<std::int64_t>> lists(const std::string& key) {
    const json& v = field(key);
    if (!v.is_array()) throw std::invalid_argument("parameter '" + key + "' must be an array");
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& item : v) out.push_back(list_of(item, key));
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : params_.items())
      if (!seen_.contains(key)) throw std::invalid_argument("unexpected parameter '" + key + "'");
  }

 private:
  const json& field(const std::string& key) {
    if (!params_.contains(key)) throw std::invalid_argument("missing parameter '" + key + "'");
    seen_.insert(key);
    return params_.at(key);
  }

  static std::int64_t bounded(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw std::invalid_argument("parameter '" + key + "' must be an integer");
    auto value = v.get<std::int64_t>();
    if (value < 0 || value > kMaxParam) throw std::invalid_argument("parameter '" + key + "' out of range");
    return value;
  }

  static std::vector<std::int64_t> list_of(const json& v, const std::string& key) {
    if (!v.is_array()) throw std::invalid_argument("parameter '" + key + "' must be an array");
    std::vector<std::int64_t> out;
    for (const auto& item : v) out.push_back(bounded(item, key));
    return out;
  }

  const json& params_;
  std::set<std::string> seen_;
};

std::string num(std::int64_t v) { return std::to_string(v); }

void require_pair(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= p) throw std::invalid_argument("rule needs 2 <= p < q");
}

Hypothesis premise(std::string text) { return {std::move(text), true}; }
Hypothesis check(std::string text) { return {std::move(text), false}; }

std::string klass(const std::string& inner) { return "[[" + inner + "]]"; }

std::string prefix_claim(std::int64_t p, std::int64_t q, Pattern pattern) {
  const std::int64_t k = q / p;
  std::string out = "CFK(" + knot(p, q) + ") = St((1," + num(p - 1) + ")^" + num(k);
  auto prefix = pattern_prefix(p, q, pattern);
  for (std::size_t i = static_cast<std::size_t>(2 * k); i < prefix.size(); ++i) out += "," + num(prefix[i]);
  return out + ",...)";
}

std::string split_claim(std::int64_t p, std::int64_t q) {
  return klass(knot(p, q)) + " = " + num(q / p) + "*" + block(p - 1) + " + " + remainder(p, q);
}

std::string remainder_one_claim(std::int64_t p, std::int64_t q) {
  return "|" + remainder(p, q) + "| << [1,n,n,1] for every n >= 1";
}

std::string dominated_claim(const std::string& lhs, const std::string& rhs) { return "|" + lhs + "| << " + rhs; }

std::string gcd_check(std::int64_t p, std::int64_t q) { return "gcd(" + num(p) + "," + num(q) + ") = 1"; }

struct Member {
  std::int64_t p, q, k;
  std::int64_t big() const { return k * q + p; }
  std::string sum() const { return family_knot(p, q, k); }
};

Member read_member(ParamReader& reader) {
  Member m{reader.integer("p"), reader.integer("q"), reader.integer("k")};
  reader.finish();
  require_pair(m.p, m.q);
  if (m.k < 1 || m.k > kMaxParam / m.q) throw std::invalid_argument("rule needs 1 <= k within range");
  return m;
}

Member member_from_list(const std::vector<std::int64_t>& v) {
  if (v.size() != 3) throw std::invalid_argument("family member must be [p,q,k]");
  Member m{v[0], v[1], v[2]};
  require_pair(m.p, m.q);
  if (m.k < 1 || m.k > kMaxParam / m.q) throw std::invalid_argument("rule needs 1 <= k within range");
  return m;
}

std::string proposition_claim(const Member& m) { return klass(m.sum()) + " >> " + block(m.p - 1); }

std::string upper_bound_claim(const Member& m) { return dominated_claim(klass(m.sum()), block(m.q - 1)); }

std::string cancellation_claim(const Member& m) {
  return klass(m.sum()) + " = " + remainder(m.q, m.big()) + " - " + num(m.q / m.p) + "*" + block(m.p - 1) + " - " +
         remainder(m.p, m.q) + " - " + num(m.k) + "*" + remainder(m.q, m.q + 1);
}

std::string chain_claim(const Member& lower, const Member& upper) {
  return klass(lower.sum()) + " << " + klass(upper.sum());
}

std::string independence_claim(const std::vector<Member>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += klass(members[i].sum());
  }
  return out + "} is linearly independent";
}

std::vector<Member> read_members(ParamReader& reader) {
  auto lists = reader.lists("members");
  reader.finish();
  std::vector<Member> out;
  for (const auto& v : lists) out.push_back(member_from_list(v));
  return out;
}

// --- rules -----------------------------------------------------------------

Instance staircase_prefix(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q");
  const Pattern pattern = pattern_from_string(r.text("pattern"));
  r.finish();
  require_pair(p, q);
  const std::int64_t k = q / p, rem = q % p;
  Instance out{StepKind::Structural, {}, prefix_claim(p, q, pattern)};
  out.hypotheses.push_back(check(gcd_check(p, q)));
  out.hypotheses.push_back(check(num(q) + " = " + num(k) + "*" + num(p) + " + " + num(rem)));
  out.hypotheses.push_back(check("1 <= " + num(k)));
  switch (pattern) {
    case Pattern::RemainderOne:
      out.hypotheses.push_back(check("4 <= " + num(p)));
      out.hypotheses.push_back(check(num(rem) + " = 1"));
      break;
    case Pattern::AnyRemainder:
      out.hypotheses.push_back(check("4 <= " + num(p)));
      out.hypotheses.push_back(check("2 <= " + num(rem)));
      out.hypotheses.push_back(check(num(rem) + " < " + num(p)));
      break;
    case Pattern::HalfRemainder:
      out.hypotheses.push_back(check("3 <= " + num(rem)));
      out.hypotheses.push_back(check("2*" + num(rem) + " < " + num(p)));
      break;
  }
  out.hypotheses.push_back(
      check("staircase(" + num(p) + "," + num(q) + ") starts with " + bracket(pattern_prefix(p, q, pattern))));
  return out;
}

Instance split(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q");
  const Pattern pattern = pattern_from_string(r.text("pattern"));
  r.finish();
  require_pair(p, q);
  const std::string st = "staircase(" + num(p) + "," + num(q) + ")";
  return {StepKind::Axiom,
          {premise(prefix_claim(p, q, pattern)), check("max(" + st + ") <= " + num(p - 1)),
           check("peel(" + st + ", " + num(p - 1) + ") = " + num(q / p))},
          split_claim(p, q)};
}

Instance remainder_one(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q");
  r.finish();
  require_pair(p, q);
  return {StepKind::Axiom,
          {premise(prefix_claim(p, q, Pattern::RemainderOne)), premise(split_claim(p, q))},
          remainder_one_claim(p, q)};
}

Instance any_remainder(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q");
  r.finish();
  require_pair(p, q);
  const Pattern pattern = q % p == 1 ? Pattern::RemainderOne : Pattern::AnyRemainder;
  return {StepKind::Axiom,
          {premise(prefix_claim(p, q, pattern)), premise(split_claim(p, q))},
          dominated_claim(remainder(p, q), block(p - 1))};
}

Instance half_remainder(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q");
  r.finish();
  require_pair(p, q);
  return {StepKind::Axiom,
          {premise(prefix_claim(p, q, Pattern::HalfRemainder)), premise(split_claim(p, q))},
          remainder(p, q) + " >> " + block(q % p - 1)};
}

Instance instantiate_rule(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q"), n = r.integer("n");
  r.finish();
  require_pair(p, q);
  return {StepKind::Structural,
          {premise(remainder_one_claim(p, q)), check("1 <= " + num(n))},
          dominated_claim(remainder(p, q), block(n))};
}

Instance a1a2_comparison(ParamReader& r) {
  const std::string clause = r.text("clause");
  auto lhs = r.list("lhs"), rhs = r.list("rhs");
  r.finish();
  if (lhs.empty() || rhs.empty()) throw std::invalid_argument("comparison needs nonempty brackets");
  static_cast<void>(Staircase{lhs});
  static_cast<void>(Staircase{rhs});
  if (clause == "first") {
    return {StepKind::Axiom,
            {check(num(rhs[0]) + " < " + num(lhs[0])), check("0 < " + num(rhs[0]))},
            bracket(lhs) + " << " + bracket(rhs)};
  }
  if (clause == "second") {
    return {StepKind::Axiom,
            {check(num(lhs[0]) + " = " + num(rhs[0])), check("0 < " + num(lhs[0])),
             check(num(rhs[1]) + " < " + num(lhs[1])), check("0 < " + num(rhs[1]))},
            bracket(lhs) + " >> " + bracket(rhs)};
  }
  throw std::invalid_argument("comparison clause must be 'first' or 'second'");
}

Instance domination_transitivity(ParamReader& r) {
  const std::int64_t p = r.integer("p"), q = r.integer("q");
  auto via = r.list("via"), to = r.list("to");
  r.finish();
  require_pair(p, q);
  if (via.empty() || to.empty()) throw std::invalid_argument("transitivity needs nonempty brackets");
  return {StepKind::Axiom,
          {premise(dominated_claim(remainder(p, q), bracket(via))), premise(bracket(to) + " >> " + bracket(via))},
          dominated_claim(remainder(p, q), bracket(to))};
}

Instance cancellation(ParamReader& r) {
  const Member m = read_member(r);
  const std::int64_t f = m.q / m.p;
  std::string equation = "(" + num(m.k) + "*" + block(m.q - 1) + " + " + remainder(m.q, m.big()) + ") - (" + num(f) +
                         "*" + block(m.p - 1) + " + " + remainder(m.p, m.q) + ") - " + num(m.k) + "*(1*" +
                         block(m.q - 1) + " + " + remainder(m.q, m.q + 1) + ") = " + remainder(m.q, m.big()) +
                         " - " + num(f) + "*" + block(m.p - 1) + " - " + remainder(m.p, m.q) + " - " + num(m.k) +
                         "*" + remainder(m.q, m.q + 1);
  return {StepKind::Structural,
          {premise(split_claim(m.q, m.big())), premise(split_claim(m.p, m.q)), premise(split_claim(m.q, m.q + 1)),
           check(equation)},
          cancellation_claim(m)};
}

Instance three_torus_knots(ParamReader& r) {
  const Member m = read_member(r);
  return {StepKind::Axiom,
          {check(gcd_check(m.p, m.q)), check("4 <= " + num(m.p)), check("2*" + num(m.p) + " < " + num(m.q)),
           check("1 <= " + num(m.k)), premise(remainder(m.q, m.big()) + " >> " + block(m.p - 1)),
           premise(dominated_claim(remainder(m.p, m.q), block(m.p - 1))),
           premise(dominated_claim(remainder(m.q, m.q + 1), block(m.p - 1))), premise(cancellation_claim(m))},
          proposition_claim(m)};
}

Instance epsilon_sign(ParamReader& r) {
  const Member m = read_member(r);
  return {StepKind::Axiom, {premise(proposition_claim(m))}, "epsilon(" + m.sum() + ") = 1"};
}

Instance a1a2_bounds(ParamReader& r) {
  const Member m = read_member(r);
  return {StepKind::Axiom,
          {premise(proposition_claim(m))},
          "a1(" + m.sum() + ") = 1 and a2(" + m.sum() + ") >= " + num(m.p - 1)};
}

Instance upsilon_vanishing(ParamReader& r) {
  const Member m = read_member(r);
  return {StepKind::Structural,
          {check("recursion(" + num(m.q) + "," + num(m.p) + "," + num(m.k) + ") holds"),
           check("upsilon(" + m.sum() + ") = 0")},
          "Upsilon(" + m.sum() + ") = 0"};
}

Instance upper_bound(ParamReader& r) {
  const Member m = read_member(r);
  return {StepKind::Axiom,
          {check(gcd_check(m.p, m.q)), check("4 <= " + num(m.p)), check(num(m.p) + " < " + num(m.q)),
           check("1 <= " + num(m.k)), premise(dominated_claim(remainder(m.q, m.big()), block(m.q - 1))),
           premise(block(m.q - 1) + " >> " + block(m.p - 1)),
           premise(dominated_claim(remainder(m.p, m.q), block(m.q - 1))),
           premise(dominated_claim(remainder(m.q, m.q + 1), block(m.q - 1))), premise(cancellation_claim(m))},
          upper_bound_claim(m)};
}

Instance domination_chain(ParamReader& r) {
  const Member lower = member_from_list(r.list("lower"));
  const Member upper = member_from_list(r.list("upper"));
  r.finish();
  Instance out{StepKind::Axiom,
               {check(num(lower.q) + " <= " + num(upper.p)), premise(proposition_claim(lower)),
                premise(upper_bound_claim(lower)), premise(proposition_claim(upper))},
               chain_claim(lower, upper)};
  if (lower.q < upper.p) out.hypotheses.push_back(premise(block(upper.p - 1) + " >> " + block(lower.q - 1)));
  return out;
}

Instance domination_implies_independence(ParamReader& r) {
  const auto members = read_members(r);
  Instance out{StepKind::Axiom, {}, independence_claim(members)};
  if (!members.empty()) out.hypotheses.push_back(premise(proposition_claim(members.front())));
  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    out.hypotheses.push_back(premise(chain_claim(members[i], members[i + 1])));
  return out;
}

}  // namespace

std::string to_string(StepKind kind) { return kind == StepKind::Axiom ? "axiom" : "structural"; }

StepKind step_kind_from_string(std::string_view text) {
  if (text == "axiom") return StepKind::Axiom;
  if (text == "structural") return StepKind::Structural;
  throw std::invalid_argument("unknown step kind '" + std::string(text) + "'");
}

std::string to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::RemainderOne: return "remainder_one";
    case Pattern::AnyRemainder: return "any_remainder";
    case Pattern::HalfRemainder: return "half_remainder";
  }
  return "";
}

Pattern pattern_from_string(std::string_view text) {
  if (text == "remainder_one") return Pattern::RemainderOne;
  if (text == "any_remainder") return Pattern::AnyRemainder;
  if (text == "half_remainder") return Pattern::HalfRemainder;
  throw std::invalid_argument("unknown staircase pattern '" + std::string(text) + "'");
}

std::vector<std::int64_t> pattern_prefix(std::int64_t p, std::int64_t q, Pattern pattern) {
  const std::int64_t k = q / p, r = q % p;
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < k; ++i) {
    out.push_back(1);
    out.push_back(p - 1);
  }
  switch (pattern) {
    case Pattern::RemainderOne:
      out.push_back(2);
      break;
    case Pattern::AnyRemainder:
      out.insert(out.end(), {1, r - 1});
      break;
    case Pattern::HalfRemainder:
      out.insert(out.end(), {1, r - 1, 1, p - r - 1});
      break;
  }
  return out;
}

Instance instantiate(std::string_view lemma, const json& params) {
  ParamReader r(params);
  if (lemma == "staircase_prefix") return staircase_prefix(r);
  if (lemma == "split") return split(r);
  if (lemma == "remainder_one") return remainder_one(r);
  if (lemma == "any_remainder") return any_remainder(r);
  if (lemma == "half_remainder") return half_remainder(r);
  if (lemma == "instantiate") return instantiate_rule(r);
  if (lemma == "a1a2_comparison") return a1a2_comparison(r);
  if (lemma == "domination_transitivity") return domination_transitivity(r);
  if (lemma == "cancellation") return cancellation(r);
  if (lemma == "three_torus_knots") return three_torus_knots(r);
  if (lemma == "epsilon_sign") return epsilon_sign(r);
  if (lemma == "a1a2_bounds") return a1a2_bounds(r);
  if (lemma == "upsilon_vanishing") return upsilon_vanishing(r);
  if (lemma == "upper_bound") return upper_bound(r);
  if (lemma == "domination_chain") return domination_chain(r);
  if (lemma == "domination_implies_independence") return domination_implies_independence(r);
  throw std::invalid_argument("unknown rule '" + std::string(lemma) + "'");
}

std::string goal_statement(std::string_view theorem, const json& params) {
  ParamReader r(params);
  if (theorem == "three_torus_knots") return proposition_claim(read_member(r));
  if (theorem == "upper_bound") return upper_bound_claim(read_member(r));
  if (theorem == "family") return independence_claim(read_members(r));
  throw std::invalid_argument("unknown theorem '" + std::string(theorem) + "'");
}

std::string knot(std::int64_t p, std::int64_t q) { return TorusKnot(p, q).to_string(); }

std::string block(std::int64_t n) { return "[1," + num(n) + "," + num(n) + ",1]"; }

std::string remainder(std::int64_t p, std::int64_t q) { return "O(" + num(p) + "," + num(q) + ")"; }

std::string bracket(const std::vector<std::int64_t>& steps) {
  std::string out = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ",";
    out += num(steps[i]);
  }
  return out + "]";
}

std::string family_knot(std::int64_t p, std::int64_t q, std::int64_t k) {
  return three_torus_knot_sum(p, q, k).to_string();
}

json knot_params(std::int64_t p, std::int64_t q) { return {{"p", p}, {"q", q}}; }

json knot_params(std::int64_t p, std::int64_t q, Pattern pattern) {
  return {{"p", p}, {"q", q}, {"pattern", to_string(pattern)}};
}

json member_params(std::int64_t p, std::int64_t q, std::int64_t k) { return {{"p", p}, {"q", q}, {"k", k}}; }

json instantiate_params(std::int64_t p, std::int64_t q, std::int64_t n) { return {{"p", p}, {"q", q}, {"n", n}}; }

json comparison_params(bool first_clause, const std::vector<std::int64_t>& lhs, const std::vector<std::int64_t>& rhs) {
  return {{"clause", first_clause ? "first" : "second"}, {"lhs", lhs}, {"rhs", rhs}};
}

json transitivity_params(std::int64_t p, std::int64_t q, const std::vector<std::int64_t>& via,
                         const std::vector<std::int64_t>& to) {
  return {{"p", p}, {"q", q}, {"via", via}, {"to", to}};
}

json chain_params(const std::vector<std::int64_t>& lower, const std::vector<std::int64_t>& upper) {
  return {{"lower", lower}, {"upper", upper}};
}

json family_params(const std::vector<std::vector<std::int64_t>>& members) { return {{"members", members}}; }

}  // namespace concordance::rules
