#include "hurwitz/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/identity_verify.hpp"
#include "hurwitz/lagrange.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/trees.hpp"

namespace hurwitz {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (passed) detail.str("");
    if (!passed) detail << "; ";
    passed = false;
    detail << what;
  }
};

void transpositions_vs_closed_form(Outcome& out) {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& alpha : partitions_of(n)) {
      const auto oracle = count_factorizations_transpositions(alpha);
      const auto closed = h_alpha(alpha).value;
      ++checked;
      if (Rational(static_cast<unsigned long>(oracle.count)) != closed)
        out.fail("H(" + alpha.to_string() + "): oracle " + std::to_string(oracle.count) + " vs " + closed.get_str());
    }
  if (count_factorizations_transpositions(Partition({3})).count != 3) out.fail("H(3) != 3");
  if (count_factorizations_transpositions(Partition({2, 2})).count != 96) out.fail("H(2,2) != 96");
  if (out.passed) out.detail << checked << " partitions, n <= 5";
}

void arbitrary_vs_closed_form(Outcome& out) {
  int checked = 0;
  for (auto [m, max_n] : {std::pair{2, 4}, std::pair{3, 3}})
    for (int n = 1; n <= max_n; ++n)
      for (const auto& alpha : partitions_of(n)) {
        const auto oracle = count_factorizations_arbitrary(alpha, m);
        const auto closed = g_alpha(alpha, m).value;
        ++checked;
        if (Rational(static_cast<unsigned long>(oracle.count)) != closed)
          out.fail("G(" + alpha.to_string() + "; m=" + std::to_string(m) + "): oracle " +
                   std::to_string(oracle.count) + " vs " + closed.get_str());
      }
  if (count_factorizations_arbitrary(Partition({3}), 2).count != 5) out.fail("G(3)(2) != 5");
  if (out.passed) out.detail << checked << " (alpha, m) cases";
}

void identity_family(Outcome& out, std::span<const IdentityTag> tags, std::vector<std::optional<int>> ms, int order) {
  int checked = 0;
  for (auto m : ms)
    for (auto tag : tags) {
      const auto report = verify(tag, m, order);
      ++checked;
      if (!report.passed) {
        const auto& d = *report.first_discrepancy;
        out.fail(std::string(identity_name(tag)) + (m ? " m=" + std::to_string(*m) : "") + " fails at z^" +
                 std::to_string(d.degree) + " " + d.monomial.to_string());
      }
    }
  if (out.passed) out.detail << checked << " identity checks at N=" << order;
}

void lagrange_cross_check(Outcome& out) {
  auto one = Series::constant(PolyCoeff(1), Var::lambda, 8);
  auto check = [&](const PhiSpec& phi, const std::string& label) {
    const Series solved = solve_fixed_point(phi);
    for (int n = 1; n <= phi.order; ++n)
      if (solved.coeff(n) != lagrange_coeff(one, phi, n)) out.fail(label + " differs at n=" + std::to_string(n));
  };
  check(PhiSpec::h_kernel(8), "H kernel");
  for (int m = 2; m <= 4; ++m) check(PhiSpec::g_kernel(m, 6), "G kernel m=" + std::to_string(m));
  if (out.passed) out.detail << "H kernel n<=8, G kernel n<=6 for m=2,3,4";
}

void tree_counts(Outcome& out) {
  const std::vector<std::pair<int, int>> cases = {{2, 4}, {3, 3}};
  std::string chosen;
  for (auto orientation : {Orientation::ccw, Orientation::cw}) {
    bool all = true;
    for (auto [m, max_n] : cases)
      for (int n = 1; n <= max_n && all; ++n)
        for (const auto& alpha : partitions_of(n)) {
          const auto predicted = balanced_tree_prediction(alpha, m).value;
          if (Rational(static_cast<unsigned long>(count_balanced(alpha, m, orientation))) != predicted) {
            all = false;
            break;
          }
        }
    if (all) {
      chosen = orientation_name(orientation);
      break;
    }
  }
  if (chosen.empty()) out.fail("no single orientation reproduces |C|G/(n-1)! for every case");

  int trees = 0;
  for (auto [m, max_n] : cases)
    for (int n = 1; n <= max_n; ++n)
      for (const auto& alpha : partitions_of(n))
        for (const auto& t : enumerate_planted(alpha, m)) {
          ++trees;
          if (auto bad = check_tree(t, m, TreeKind::planted)) {
            out.fail("tree " + t.encode() + ": " + *bad);
            continue;
          }
          const auto s = tree_stats(t, m);
          const long c = c_alpha(alpha, m);
          if (s.black_leaves != c || s.white_leaves != c - m || s.inner_black != n - 1 ||
              s.inner_white != alpha.length() || s.inner_degree_two_black != alpha.length() - 1 ||
              s.white_classes != alpha.multiplicities())
            out.fail("tree " + t.encode() + " has the wrong type statistics");
        }
  if (out.passed) out.detail << "orientation " << chosen << ", " << trees << " planted trees validated";
}

void pseudo_counts(Outcome& out) {
  const int m = 2;
  const Series aw = build_series({SeriesTag::Aw, m, 4});
  for (int n = 1; n <= 4; ++n) {
    PolyCoeff from_trees;
    for (const auto& [profile, count] : count_pseudo(n, m)) {
      Monomial mono;
      mono.u = profile.alpha.length();
      mono.x = profile.black_leaves;
      for (auto [i, d] : profile.alpha.multiplicities()) mono.set_p_exponent(i, d);
      from_trees.add_term(mono, Rational(static_cast<unsigned long>(count)));
    }
    if (from_trees != aw.coeff(n)) out.fail("n=" + std::to_string(n) + ": pseudo-tree table differs from [z^n]A(w)");
  }
  if (out.passed) out.detail << "n <= 4, m = 2";
}

void integrality_sweep(Outcome& out) {
  int checked = 0;
  for (int n = 1; n <= 12; ++n)
    for (const auto& alpha : partitions_of(n)) {
      try {
        h_alpha(alpha);
        for (int m = 2; m <= 5; ++m) {
          g_alpha(alpha, m);
          balanced_tree_prediction(alpha, m);
        }
        ++checked;
      } catch (const std::logic_error& e) {
        out.fail(e.what());
      }
    }
  if (out.passed) out.detail << checked << " partitions x m in {2..5}";
}

void mutation_sensitivity(Outcome& out) {
  int checked = 0;
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& alpha : partitions_of(n)) {
        GOverrides overrides{{alpha, g_alpha(alpha, m).value + 1}};
        bool caught = false;
        for (auto tag : {IdentityTag::RECG, IdentityTag::MAIN1, IdentityTag::MAIN2}) {
          const auto report = verify(tag, m, 4, overrides);
          if (!report.passed && report.first_discrepancy->degree == n) caught = true;
        }
        ++checked;
        if (!caught) out.fail("perturbing G(" + alpha.to_string() + "; m=" + std::to_string(m) + ") went undetected");
      }
  if (out.passed) out.detail << checked << " single-value mutations detected at their own degree";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream line;
  line << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (" << r.seconds << " s, limit "
       << r.limit_seconds << " s): " << r.detail;
  return line.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  const std::vector<Criterion> criteria = {
      {1, "transposition factorizations: oracle == H_alpha", 120, transpositions_vs_closed_form},
      {2, "arbitrary factorizations: oracle == G_alpha(m)", 120, arbitrary_vs_closed_form},
      {3, "G-family identities at N=6, m=2,3,4", 300,
       [](Outcome& o) { identity_family(o, g_family_identities(), {2, 3, 4}, 6); }},
      {4, "H-family identities at N=8", 300,
       [](Outcome& o) { identity_family(o, h_family_identities(), {std::nullopt}, 8); }},
      {5, "fixed-point solutions == Lagrange coefficients", 60, lagrange_cross_check},
      {6, "balanced planted trees == |C|G/(n-1)!", 120, tree_counts},
      {7, "pseudo-Eulerian tree counts == [z^n]A(w)", 60, pseudo_counts},
      {8, "integrality sweep n <= 12", 60, integrality_sweep},
      {9, "mutation sensitivity of RECG/MAIN1/MAIN2", 60, mutation_sensitivity},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) outcome.fail("runtime limit exceeded");
    results.push_back({c.id, c.title, outcome.passed, outcome.detail.str(), seconds, c.limit_seconds});
    if (progress) *progress << format_result(results.back()) << std::endl;
  }
  return results;
}

}  // namespace hurwitz
