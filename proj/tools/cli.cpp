#include "cli.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>

#include "hurwitz/acceptance.hpp"
#include "hurwitz/closed_form.hpp"
#include "hurwitz/identity_verify.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/trees.hpp"

namespace hurwitz::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string alpha;
  std::optional<int> m;
  std::optional<int> n;
  int order = 6;
  std::string id;
  bool all = false;
  bool transpositions = false;
  std::string orientation = "ccw";
  bool csv = false;
  bool json = true;
  int max_n = 0;
  double budget = 0;
};

Partition require_alpha(const Options& o) {
  if (o.alpha.empty()) throw UsageError("--alpha is required");
  return Partition::parse(o.alpha);
}

OracleBudget oracle_budget(const Options& o) {
  OracleBudget b;
  if (o.max_n > 0) b.max_n_transpositions = o.max_n;
  if (o.budget > 0) b.max_tuples = o.budget;
  return b;
}

TreeBudget tree_budget(const Options& o) {
  TreeBudget b;
  if (o.max_n > 0) b.max_n = o.max_n;
  return b;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int run_h(const Options& o, std::ostream& out) {
  emit(out, to_json(h_alpha(require_alpha(o))));
  return kOk;
}

int run_g(const Options& o, std::ostream& out) {
  if (!o.m) throw UsageError("--m is required");
  emit(out, to_json(g_alpha(require_alpha(o), *o.m)));
  return kOk;
}

int run_oracle(const Options& o, std::ostream& out) {
  const Partition alpha = require_alpha(o);
  if (o.transpositions == o.m.has_value()) throw UsageError("oracle needs exactly one of --m or --transpositions");
  const auto start = std::chrono::steady_clock::now();
  const auto result = o.transpositions ? count_factorizations_transpositions(alpha, oracle_budget(o))
                                       : count_factorizations_arbitrary(alpha, *o.m, oracle_budget(o));
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  Json j;
  j["alpha"] = to_json(alpha);
  j["mode"] = factor_mode_name(result.mode);
  if (o.m) j["m"] = *o.m;
  j["count"] = std::to_string(result.count);
  j["elapsed_ms"] = elapsed;
  emit(out, j);
  return kOk;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.order < 1) throw UsageError("--order must be >= 1");
  const bool all = o.all || o.id == "all";
  if (!all) {
    if (o.id.empty()) throw UsageError("verify needs --id <IdentityId|all> or --all");
    auto tag = parse_identity(o.id);
    if (!tag) throw UsageError("unknown identity: " + o.id);
    if (identity_needs_m(*tag) && !o.m) throw UsageError(o.id + " requires --m");
    const auto report = verify(*tag, o.m, o.order);
    emit(out, to_json(report));
    return report.passed ? kOk : kCheckFailed;
  }
  std::vector<std::optional<int>> ms;
  if (o.m)
    ms.push_back(o.m);
  else
    ms = {2, 3, 4};
  Json reports = Json::array();
  bool passed = true;
  for (auto m : ms)
    for (auto tag : g_family_identities()) {
      auto r = verify(tag, m, o.order);
      passed = passed && r.passed;
      reports.push_back(to_json(r));
    }
  for (auto tag : h_family_identities()) {
    auto r = verify(tag, std::nullopt, o.order);
    passed = passed && r.passed;
    reports.push_back(to_json(r));
  }
  Json j;
  j["order"] = o.order;
  j["status"] = passed ? "pass" : "fail";
  j["reports"] = std::move(reports);
  emit(out, j);
  return passed ? kOk : kCheckFailed;
}

int run_trees(const Options& o, std::ostream& out) {
  const Partition alpha = require_alpha(o);
  if (!o.m) throw UsageError("--m is required");
  auto orientation = parse_orientation(o.orientation);
  if (!orientation) throw UsageError("--orientation must be cw or ccw");
  const auto budget = tree_budget(o);
  const auto planted = enumerate_planted(alpha, *o.m, budget);
  std::uint64_t balanced = 0;
  for (const auto& t : planted) {
    if (auto bad = check_tree(t, *o.m, TreeKind::planted)) throw std::logic_error("invalid tree generated: " + *bad);
    if (is_balanced(t, *orientation)) ++balanced;
  }
  const auto prediction = balanced_tree_prediction(alpha, *o.m).value;
  const bool match = Rational(static_cast<unsigned long>(balanced)) == prediction;
  Json j;
  j["alpha"] = to_json(alpha);
  j["m"] = *o.m;
  j["orientation"] = orientation_name(*orientation);
  j["planted_count"] = std::to_string(planted.size());
  j["balanced_count"] = std::to_string(balanced);
  j["prediction"] = prediction.get_str();
  j["match"] = match;
  emit(out, j);
  return match ? kOk : kCheckFailed;
}

int run_series(const Options& o, std::ostream& out) {
  auto tag = parse_series_tag(o.id);
  if (!tag) throw UsageError("series needs --id one of G, H, Hhat, T, v, w, s, Aw, Bs");
  if (series_needs_m(*tag) && !o.m) throw UsageError(o.id + " requires --m");
  if (o.order < 0) throw UsageError("--order must be >= 0");
  emit(out, to_json(build_series({*tag, o.m, o.order})));
  return kOk;
}

int run_census(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("--n is required");
  if (o.transpositions == o.m.has_value()) throw UsageError("census needs exactly one of --m or --transpositions");
  const auto mode = o.transpositions ? FactorMode::transpositions : FactorMode::arbitrary;
  const auto table = census(*o.n, mode, o.m, oracle_budget(o));
  bool all_match = true;
  Json rows = Json::array();
  std::string csv = "alpha,count,closed_form,match\n";
  for (const auto& [alpha, fc] : table) {
    const Rational closed = o.transpositions ? h_alpha(alpha).value : g_alpha(alpha, *o.m).value;
    const bool match = Rational(static_cast<unsigned long>(fc.count)) == closed;
    all_match = all_match && match;
    Json row;
    row["alpha"] = to_json(alpha);
    row["count"] = std::to_string(fc.count);
    row["closed_form"] = closed.get_str();
    row["match"] = match;
    rows.push_back(std::move(row));
    csv += "\"" + alpha.to_string() + "\"," + std::to_string(fc.count) + "," + closed.get_str() + "," +
           (match ? "true" : "false") + "\n";
  }
  if (o.csv) {
    out << csv;
  } else {
    Json j;
    j["n"] = *o.n;
    j["mode"] = factor_mode_name(mode);
    if (o.m) j["m"] = *o.m;
    j["rows"] = std::move(rows);
    emit(out, j);
  }
  return all_match ? kOk : kCheckFailed;
}

int run_selftest(std::ostream& out, std::ostream& err) {
  const auto results = run_acceptance(&err);
  bool passed = true;
  Json criteria = Json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    Json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["status"] = r.passed ? "pass" : "fail";
    c["detail"] = r.detail;
    criteria.push_back(std::move(c));
  }
  Json j;
  j["status"] = passed ? "pass" : "fail";
  j["criteria"] = std::move(criteria);
  emit(out, j);
  return passed ? kOk : kCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-0 Hurwitz counts, generating-series identities and brute-force oracles", "hurwitz"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_alpha = [&](CLI::App* sub) { sub->add_option("--alpha", o.alpha, "cycle type, e.g. 3,1,1"); };
  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", o.m, "number of arbitrary factors"); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "largest n accepted by brute-force enumeration");
    sub->add_option("--budget", o.budget, "largest (n!)^(m-1) accepted by the arbitrary-factor oracle");
  };

  auto* h = app.add_subcommand("h", "closed form H_alpha (simple branch points)");
  add_alpha(h);
  auto* g = app.add_subcommand("g", "closed form G_alpha(m) (m arbitrary branch points)");
  add_alpha(g);
  add_m(g);
  auto* oracle = app.add_subcommand("oracle", "brute-force count of minimal transitive factorizations");
  add_alpha(oracle);
  add_m(oracle);
  oracle->add_flag("--transpositions", o.transpositions, "factor into transpositions");
  add_budget(oracle);
  auto* ver = app.add_subcommand("verify", "check a generating-series identity coefficientwise");
  ver->add_option("--id", o.id, "identity tag, or 'all'");
  ver->add_flag("--all", o.all, "run the full catalog");
  add_m(ver);
  ver->add_option("--order", o.order, "truncation order in z");
  auto* trees = app.add_subcommand("trees", "count planted and balanced m-Eulerian trees");
  add_alpha(trees);
  add_m(trees);
  trees->add_option("--orientation", o.orientation, "leaf matching orientation (cw|ccw)");
  add_budget(trees);
  auto* series = app.add_subcommand("series", "print a generating series as JSON");
  series->add_option("--id", o.id, "series tag: G, H, Hhat, T, v, w, s, Aw, Bs");
  add_m(series);
  series->add_option("--order", o.order, "truncation order");
  auto* cen = app.add_subcommand("census", "oracle counts for every alpha |- n");
  cen->add_option("--n", o.n, "size");
  add_m(cen);
  cen->add_flag("--transpositions", o.transpositions, "factor into transpositions");
  cen->add_flag("--json", o.json, "JSON output (default)");
  cen->add_flag("--csv", o.csv, "CSV output");
  add_budget(cen);
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (h->parsed()) return run_h(o, out);
    if (g->parsed()) return run_g(o, out);
    if (oracle->parsed()) return run_oracle(o, out);
    if (ver->parsed()) return run_verify(o, out);
    if (trees->parsed()) return run_trees(o, out);
    if (series->parsed()) return run_series(o, out);
    if (cen->parsed()) return run_census(o, out);
    if (self->parsed()) return run_selftest(out, err);
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace hurwitz::cli
