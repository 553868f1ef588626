// knotconc: torus knot concordance invariants and certificates.
//
// Exit codes: 0 ok, 1 invariant check failed, 2 bad input,
// 3 certificate re-verification failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "concordance/certificate.hpp"
#include "concordance/knot_expr.hpp"
#include "concordance/serialize.hpp"
#include "concordance/upsilon.hpp"
#include "concordance/verify.hpp"
#include "json.hpp"

using namespace concordance;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvariantFailed = 1, kBadInput = 2, kVerificationFailed = 3 };

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int run_staircase(std::int64_t p, std::int64_t q, bool as_json) {
  TorusKnot knot(p, q);
  json report = staircase_report(knot);
  if (as_json) {
    std::cout << report.dump(2) << '\n';
    return kOk;
  }
  const auto steps = report["staircase"].get<std::vector<std::int64_t>>();
  std::cout << "knot: " << knot.to_string() << '\n'
            << "staircase: (" << join(steps) << ")\n"
            << "a-tuple: (" << join(steps) << ")\n"
            << "genus: " << knot.genus() << '\n'
            << "alexander exponents: " << join(report["alexander_exponents"].get<std::vector<std::int64_t>>())
            << '\n';
  return kOk;
}

int run_semigroup(std::int64_t p, std::int64_t q, std::int64_t limit, bool as_json) {
  if (limit < 0) throw std::invalid_argument("--limit must be nonnegative");
  Semigroup s{TorusKnot(p, q)};
  if (as_json) {
    json members = json::array();
    for (std::int64_t n = 0; n < limit; ++n) members.push_back(s.contains(n));
    std::cout << json{{"p", p}, {"q", q}, {"conductor", s.conductor()}, {"genus", s.genus()},
                      {"gaps", s.gaps()}, {"member", members}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "n,member\n";
  for (std::int64_t n = 0; n < limit; ++n) std::cout << n << ',' << (s.contains(n) ? 1 : 0) << '\n';
  return kOk;
}

int run_upsilon(const std::string& expr, bool as_json, bool as_csv, const std::string& svg_path,
                const std::string& eval_at) {
  TorusKnotSum sum = parse_knot_expr(expr);
  PLFunction f = upsilon_of_sum(sum);
  if (!eval_at.empty()) {
    Rational t = parse_rational(eval_at);
    if (t < 0 || t > 2) throw std::invalid_argument("--eval needs 0 <= t <= 2");
    std::cout << to_string(f(t)) << '\n';
    return kOk;
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw std::invalid_argument("cannot write " + svg_path);
    out << to_svg(f, "Upsilon of " + sum.to_string());
    if (!as_json && !as_csv) return kOk;
  }
  if (as_json) {
    std::cout << to_json(f).dump(2) << '\n';
  } else {
    std::cout << to_csv(f);
  }
  return kOk;
}

int run_vanish(const std::string& expr) {
  TorusKnotSum sum = parse_knot_expr(expr);
  if (upsilon_of_sum(sum).is_zero()) {
    std::cout << "Upsilon(" << sum.to_string() << ") = 0\n";
    return kOk;
  }
  std::cout << "Upsilon(" << sum.to_string() << ") is not identically 0\n";
  return kInvariantFailed;
}

int run_recursion(std::int64_t q, std::int64_t p, std::int64_t k) {
  bool holds = check_recursion(q, p, k);
  std::cout << "recursion(" << q << "," << p << "," << k << ") " << (holds ? "holds" : "FAILS") << '\n';
  return holds ? kOk : kInvariantFailed;
}

void write_output(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << doc.dump(2) << '\n';
}

int run_certify(std::int64_t p, std::int64_t q, std::int64_t k, const std::string& out) {
  json doc = {{"proposition", to_json(certify_proposition(p, q, k))},
              {"upper_bound", to_json(certify_upper_bound(p, q, k))}};
  write_output(doc, out);
  return kOk;
}

int run_family(std::int64_t count, const std::string& rule, bool as_json, const std::string& out) {
  if (rule != "default") throw std::invalid_argument("unknown family rule '" + rule + "'");
  if (count < 0) throw std::invalid_argument("--count must be nonnegative");
  FamilyResult family = build_family(count);
  if (as_json || !out.empty()) {
    write_output(to_json(family), out);
    return kOk;
  }
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    std::cout << "K" << i + 1 << " = " << connected_sum_notation(m) << "  (p=" << m.p << ", q=" << m.q
              << ", k=" << m.k << ")  Upsilon " << (family.upsilon_vanishes[i] ? "= 0" : "!= 0") << '\n';
  }
  for (const auto& cert : family.propositions) std::cout << cert.goal << '\n';
  for (const auto& step : family.independence.steps)
    if (step.lemma == "domination_chain") std::cout << step.claim << '\n';
  std::cout << family.independence.goal << '\n';
  std::cout << "verified: " << family.independence.steps.size() << " steps\n";
  return kOk;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return kBadInput;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    std::cerr << "error: " << path << " is not JSON: " << e.what() << '\n';
    return kBadInput;
  }
  VerificationReport report = verify_document(doc);
  if (report.ok) {
    std::cout << path << ": verified\n";
    return kOk;
  }
  std::cerr << path << ": verification FAILED\n";
  for (const auto& f : report.failures) std::cerr << "  " << f << '\n';
  return kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concordance invariants of torus knots and sums of torus knots"};
  app.require_subcommand(0, 1);

  std::string verify_path;
  app.add_option("--verify", verify_path, "Re-check a stored certificate file");

  std::int64_t p = 0, q = 0, k = 0, limit = 0, count = 0;
  bool as_json = false, as_csv = false;
  std::string expr, svg_path, eval_at, out_path, rule = "default", file;

  auto* staircase = app.add_subcommand("staircase", "Staircase, a-tuple, genus and Alexander exponents of T(p,q)");
  staircase->add_option("p", p)->required();
  staircase->add_option("q", q)->required();
  staircase->add_flag("--json", as_json);

  auto* semigroup = app.add_subcommand("semigroup", "Membership table of <p,q> on [0, N)");
  semigroup->add_option("p", p)->required();
  semigroup->add_option("q", q)->required();
  semigroup->add_option("--limit", limit, "N")->required();
  semigroup->add_flag("--json", as_json);

  auto* upsilon = app.add_subcommand("upsilon", "Upsilon of a sum of torus knots");
  upsilon->add_option("expr", expr, "e.g. \"T(9,13) - T(4,9) - T(9,10)\"")->required();
  auto* json_flag = upsilon->add_flag("--json", as_json);
  auto* csv_flag = upsilon->add_flag("--csv", as_csv);
  json_flag->excludes(csv_flag);
  upsilon->add_option("--svg", svg_path, "Write an SVG plot to PATH");
  upsilon->add_option("--eval", eval_at, "Print the value at t (integer, a/b or decimal)");

  auto* vanish = app.add_subcommand("vanish", "Exit 0 iff Upsilon vanishes identically");
  vanish->add_option("expr", expr)->required();

  auto* recursion = app.add_subcommand("recursion", "Check Upsilon(T(q,kq+p)) = Upsilon(T(p,q)) + k Upsilon(T(q,q+1))");
  recursion->add_option("q", q)->required();
  recursion->add_option("p", p)->required();
  recursion->add_option("k", k)->required();

  auto* certify = app.add_subcommand("certify", "Certificates for T(q,kq+p) - T(p,q) - k T(q,q+1)");
  certify->add_option("p", p)->required();
  certify->add_option("q", q)->required();
  certify->add_option("k", k)->required();
  certify->add_option("--out", out_path, "Write JSON to a file instead of stdout");

  auto* family = app.add_subcommand("family", "Members and independence certificate of a family");
  family->add_option("--count", count)->required();
  family->add_option("--rule", rule)->check(CLI::IsMember({"default"}));
  family->add_flag("--json", as_json);
  family->add_option("--out", out_path, "Write JSON to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Re-check a stored certificate file");
  verify->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (!verify_path.empty()) {
      if (!app.get_subcommands().empty()) throw std::invalid_argument("--verify takes no subcommand");
      return run_verify(verify_path);
    }
    if (*staircase) return run_staircase(p, q, as_json);
    if (*semigroup) return run_semigroup(p, q, limit, as_json);
    if (*upsilon) return run_upsilon(expr, as_json, as_csv, svg_path, eval_at);
    if (*vanish) return run_vanish(expr);
    if (*recursion) return run_recursion(q, p, k);
    if (*certify) return run_certify(p, q, k, out_path);
    if (*family) return run_family(count, rule, as_json, out_path);
    if (*verify) return run_verify(file);
    std::cout << app.help();
    return kBadInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant check failed: " << e.what() << '\n';
    return kInvariantFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariantFailed;
  }
}
