#include "concordance/certificate.hpp"

#include <future>
#include <numeric>
#include <stdexcept>

#include "concordance/order.hpp"
#include "concordance/upsilon.hpp"
#include "concordance/verify.hpp"

namespace concordance {

using nlohmann::json;
using rules::Pattern;

namespace {

constexpr std::int64_t kMaxParam = std::int64_t{1} << 30;

class Derivation {
 public:
  void add(const std::string& lemma, json params) {
    rules::Instance inst = rules::instantiate(lemma, params);
    Step step{inst.kind, lemma, std::move(params), {}, std::move(inst.claim)};
    for (auto& h : inst.hypotheses) step.hypotheses.push_back(std::move(h.text));
    steps_.push_back(std::move(step));
  }

  void append(const std::vector<Step>& steps) { steps_.insert(steps_.end(), steps.begin(), steps.end()); }

  Certificate finish(std::string theorem, json params) && {
    Certificate cert{std::move(theorem), std::move(params), {}, std::move(steps_), "verified"};
    cert.goal = rules::goal_statement(cert.theorem, cert.params);
    VerificationReport report = verify_certificate(cert);
    if (!report.ok) {
      std::string message = "generated certificate failed re-verification:";
      for (const auto& f : report.failures) message += "\n  " + f;
      throw std::logic_error(message);
    }
    return cert;
  }

 private:
  std::vector<Step> steps_;
};

std::vector<std::int64_t> block_steps(std::int64_t n) { return {1, n, n, 1}; }

void require_member(std::int64_t p, std::int64_t q, std::int64_t k, bool half) {
  if (k < 1) throw std::invalid_argument("k must be positive, got k = " + std::to_string(k));
  if (p < 4) throw std::invalid_argument("p must be at least 4, got p = " + std::to_string(p));
  if (half ? !(2 * p < q) : !(p < q))
    throw std::invalid_argument(half ? "need p < q/2, got p = " + std::to_string(p) + ", q = " + std::to_string(q)
                                     : "need p < q, got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
  if (q > kMaxParam || k > kMaxParam / q) throw std::invalid_argument("parameters too large");
}

// Prefix, split and remainder-domination steps for T(p,q) along `pattern`.
void decompose_steps(Derivation& d, const DecompositionRecord& rec, Pattern pattern, const std::string& conclusion) {
  const auto p = rec.knot.p(), q = rec.knot.q();
  d.add("staircase_prefix", rules::knot_params(p, q, pattern));
  d.add("split", rules::knot_params(p, q, pattern));
  d.add(conclusion, rules::knot_params(p, q));
}

}  // namespace

json to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"kind", rules::to_string(s.kind)},
                     {"lemma", s.lemma},
                     {"params", s.params},
                     {"hypotheses", s.hypotheses},
                     {"claim", s.claim}});
  }
  return {{"theorem", cert.theorem},
          {"params", cert.params},
          {"goal", cert.goal},
          {"steps", std::move(steps)},
          {"verdict", cert.verdict}};
}

namespace {

const json& require_key(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key))
    throw std::invalid_argument(std::string(where) + " is missing \"" + key + "\"");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const char* where) {
  const json& v = require_key(obj, key, where);
  if (!v.is_string()) throw std::invalid_argument(std::string(where) + " field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

void require_only(const json& obj, std::initializer_list<const char*> keys, const char* where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw std::invalid_argument(std::string(where) + " has unexpected field \"" + key + "\"");
  }
}

}  // namespace

Certificate certificate_from_json(const json& doc) {
  require_only(doc, {"theorem", "params", "goal", "steps", "verdict"}, "certificate");
  Certificate cert;
  cert.theorem = require_string(doc, "theorem", "certificate");
  cert.params = require_key(doc, "params", "certificate");
  cert.goal = require_string(doc, "goal", "certificate");
  cert.verdict = require_string(doc, "verdict", "certificate");
  const json& steps = require_key(doc, "steps", "certificate");
  if (!steps.is_array()) throw std::invalid_argument("certificate field \"steps\" must be an array");
  for (const auto& s : steps) {
    require_only(s, {"kind", "lemma", "params", "hypotheses", "claim"}, "step");
    Step step;
    step.kind = rules::step_kind_from_string(require_string(s, "kind", "step"));
    step.lemma = require_string(s, "lemma", "step");
    step.params = require_key(s, "params", "step");
    step.claim = require_string(s, "claim", "step");
    const json& hyps = require_key(s, "hypotheses", "step");
    if (!hyps.is_array()) throw std::invalid_argument("step field \"hypotheses\" must be an array");
    for (const auto& h : hyps) {
      if (!h.is_string()) throw std::invalid_argument("hypotheses must be strings");
      step.hypotheses.push_back(h.get<std::string>());
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

Certificate certify_proposition(std::int64_t p, std::int64_t q, std::int64_t k) {
  require_member(p, q, k, true);
  const std::int64_t big = k * q + p;
  const DecompositionRecord outer = decompose_torus(q, big);
  const DecompositionRecord base = decompose_torus(p, q);
  const DecompositionRecord unit = decompose_torus(q, q + 1);
  if (!outer.half_remainder) throw std::logic_error(outer.knot.to_string() + " should admit the 3 <= r < p/2 split");

  Derivation d;
  decompose_steps(d, outer, Pattern::HalfRemainder, "half_remainder");
  decompose_steps(d, base, base.branch, "any_remainder");
  decompose_steps(d, unit, Pattern::RemainderOne, "remainder_one");
  d.add("instantiate", rules::instantiate_params(q, q + 1, p - 1));
  const json member = rules::member_params(p, q, k);
  d.add("cancellation", member);
  d.add("three_torus_knots", member);
  d.add("epsilon_sign", member);
  d.add("a1a2_bounds", member);
  d.add("upsilon_vanishing", member);
  return std::move(d).finish("three_torus_knots", member);
}

Certificate certify_upper_bound(std::int64_t p, std::int64_t q, std::int64_t k) {
  require_member(p, q, k, false);
  const std::int64_t big = k * q + p;
  const DecompositionRecord outer = decompose_torus(q, big);
  const DecompositionRecord base = decompose_torus(p, q);
  const DecompositionRecord unit = decompose_torus(q, q + 1);

  Derivation d;
  decompose_steps(d, outer, Pattern::AnyRemainder, "any_remainder");
  decompose_steps(d, base, base.branch, "any_remainder");
  d.add("a1a2_comparison", rules::comparison_params(false, block_steps(q - 1), block_steps(p - 1)));
  d.add("domination_transitivity", rules::transitivity_params(p, q, block_steps(p - 1), block_steps(q - 1)));
  decompose_steps(d, unit, Pattern::RemainderOne, "remainder_one");
  d.add("instantiate", rules::instantiate_params(q, q + 1, q - 1));
  const json member = rules::member_params(p, q, k);
  d.add("cancellation", member);
  d.add("upper_bound", member);
  return std::move(d).finish("upper_bound", member);
}

FamilyMember default_family_rule(std::int64_t i) {
  if (i < 1) throw std::invalid_argument("family index starts at 1");
  std::int64_t power = 1;
  for (std::int64_t j = 0; j < i; ++j) {
    if (power > kMaxParam) throw std::invalid_argument("member " + std::to_string(i) + " exceeds the supported range");
    power *= 3;
  }
  return {power + 1, 2 * power + 3, 1};
}

FamilyResult build_family(std::int64_t count, const FamilyRule& rule) {
  if (count < 0) throw std::invalid_argument("count must be nonnegative");
  FamilyResult out;
  for (std::int64_t i = 1; i <= count; ++i) {
    FamilyMember m = rule(i);
    try {
      require_member(m.p, m.q, m.k, true);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("member " + std::to_string(i) + ": " + e.what());
    }
    if (!out.members.empty() && out.members.back().q > m.p)
      throw std::invalid_argument("member " + std::to_string(i) + ": q_" + std::to_string(i - 1) + " = " +
                                  std::to_string(out.members.back().q) + " exceeds p_" + std::to_string(i) + " = " +
                                  std::to_string(m.p));
    out.members.push_back(m);
  }

  struct MemberWork {
    Certificate proposition;
    Certificate upper_bound;
    bool vanishes;
  };
  std::vector<std::future<MemberWork>> work;
  for (const auto& m : out.members) {
    work.push_back(std::async(std::launch::async, [m] {
      return MemberWork{certify_proposition(m.p, m.q, m.k), certify_upper_bound(m.p, m.q, m.k),
                        upsilon_of_sum(three_torus_knot_sum(m.p, m.q, m.k)).is_zero()};
    }));
  }
  for (auto& f : work) {
    MemberWork w = f.get();
    out.propositions.push_back(std::move(w.proposition));
    out.upper_bounds.push_back(std::move(w.upper_bound));
    out.upsilon_vanishes.push_back(w.vanishes);
  }

  Derivation d;
  std::vector<std::vector<std::int64_t>> listed;
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    d.append(out.propositions[i].steps);
    d.append(out.upper_bounds[i].steps);
    const auto& m = out.members[i];
    listed.push_back({m.p, m.q, m.k});
  }
  for (std::size_t i = 0; i + 1 < out.members.size(); ++i) {
    const auto& lower = out.members[i];
    const auto& upper = out.members[i + 1];
    if (lower.q < upper.p)
      d.add("a1a2_comparison", rules::comparison_params(false, block_steps(upper.p - 1), block_steps(lower.q - 1)));
    d.add("domination_chain", rules::chain_params(listed[i], listed[i + 1]));
  }
  const json params = rules::family_params(listed);
  d.add("domination_implies_independence", params);
  out.independence = std::move(d).finish("family", params);
  return out;
}

std::string connected_sum_notation(const FamilyMember& m) {
  auto t = [](std::int64_t a, std::int64_t b) { return "T_{" + std::to_string(a) + "," + std::to_string(b) + "}"; };
  std::string unit = m.k == 1 ? "" : std::to_string(m.k);
  return t(m.q, m.k * m.q + m.p) + "#-" + t(m.p, m.q) + "#-" + unit + t(m.q, m.q + 1);
}

json to_json(const FamilyResult& family) {
  json members = json::array();
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    members.push_back({{"index", i + 1},
                       {"p", m.p},
                       {"q", m.q},
                       {"k", m.k},
                       {"knot", rules::family_knot(m.p, m.q, m.k)},
                       {"connected_sum", connected_sum_notation(m)},
                       {"upsilon_vanishes", static_cast<bool>(family.upsilon_vanishes[i])},
                       {"proposition", to_json(family.propositions[i])},
                       {"upper_bound", to_json(family.upper_bounds[i])}});
  }
  return {{"members", std::move(members)}, {"independence", to_json(family.independence)}};
}

}  // namespace concordance
