// qsprob command-line surface: lemma verification suites, T(n) tables,
// run-space dumps and Monte Carlo reports in table/CSV/JSON form.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsprob/generators.hpp"
#include "qsprob/prob_core.hpp"
#include "qsprob/quicksort_space.hpp"
#include "qsprob/recurrence.hpp"
#include "qsprob/run.hpp"
#include "qsprob/simulator.hpp"
#include "qsprob/splitter.hpp"

using nlohmann::json;
using namespace qsprob;

namespace {

json rational_json(const Rational& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json run_json(const RunPtr& run) {
  if (is_leaf(run)) return nullptr;
  return json{{"rank", run->rank},
              {"left", run_json(run->left)},
              {"right", run_json(run->right)}};
}

struct Caps {
  long enum_cap = kDefaultEnumCap;
  long exact_cap = kDefaultExactCap;
  long perm_cap = kDefaultPermCap;
  long bound_scan = 100000;
};

class Checker {
 public:
  bool check(bool ok, const std::string& name, const std::string& params) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << params << ")\n";
    if (!ok) failed_ = true;
    return ok;
  }
  bool all_passed() const { return !failed_; }

 private:
  bool failed_ = false;
};

void verify_core_laws(Checker& c) {
  // The coin-then-coin-or-die experiment: heads scores 0, tails 1, a die
  // roll scores its face; expected total 10/4.
  FiniteSpace coin({"h", "t"}, {rat(1, 2), rat(1, 2)});
  FiniteSpace die({"1", "2", "3", "4", "5", "6"},
                  std::vector<Rational>(6, rat(1, 6)));
  RandomVar coin_score{{"h", 0}, {"t", 1}};
  RandomVar die_score;
  for (long f = 1; f <= 6; ++f) die_score[std::to_string(f)] = f;
  Rational total = deferred_expectation(
      coin, coin_score, {{"h", coin}, {"t", die}},
      {{"h", coin_score}, {"t", die_score}});
  c.check(total == rat(10, 4), "deferred decision coin/die example", "E = 10/4");

  SplitMix64 rng(1);
  const int instances = 500;
  bool independence = true, additivity = true, conditioning = true;
  bool total_exp = true, deferred = true;
  for (int it = 0; it < instances; ++it) {
    FiniteSpace s1 = random_space(rng, 6, "a");
    FiniteSpace s2 = random_space(rng, 6, "b");
    FiniteSpace joint = product(s1, s2);

    Event a = random_event(rng, s1);
    Event b = random_event(rng, s2);
    Event e1a, e2b, both;
    for (const Label& x : s1.outcomes()) {
      for (const Label& y : s2.outcomes()) {
        Label xy = pair_label(x, y);
        if (a.count(x)) e1a.insert(xy);
        if (b.count(y)) e2b.insert(xy);
        if (a.count(x) && b.count(y)) both.insert(xy);
      }
    }
    if (prob(joint, e1a) != prob(s1, a) || prob(joint, e2b) != prob(s2, b) ||
        prob(joint, both) != prob(s1, a) * prob(s2, b)) {
      independence = false;
    }

    RandomVar x1 = random_rv(rng, s1);
    RandomVar x2 = random_rv(rng, s2);
    RandomVar summed;
    for (const Label& x : s1.outcomes()) {
      for (const Label& y : s2.outcomes()) {
        summed[pair_label(x, y)] = x1.at(x) + x2.at(y);
      }
    }
    if (expectation(joint, summed) != expectation(s1, x1) + expectation(s2, x2)) {
      additivity = false;
    }

    std::map<Label, FiniteSpace> branch;
    std::map<Label, RandomVar> branch_rvs;
    for (const Label& x : s1.outcomes()) {
      FiniteSpace second = random_space(rng, 4, "r" + x + "_");
      branch_rvs.emplace(x, random_rv(rng, second));
      branch.emplace(x, std::move(second));
    }
    FiniteSpace composed = conditional_compose(s1, branch);
    for (const Label& x : s1.outcomes()) {
      if (s1.weight_of(x) == 0) continue;
      const FiniteSpace& second = branch.at(x);
      Event inner = random_event(rng, second);
      Event e1i, e2a;
      for (std::size_t j = 0; j < s1.size(); ++j) {
        for (const Label& y : branch.at(s1.label(j)).outcomes()) {
          if (s1.label(j) == x) e1i.insert(pair_label(x, y));
        }
      }
      for (const Label& y : inner) e2a.insert(pair_label(x, y));
      // q(e2(A) | e1(i)) = p_i(A)
      Rational p_e1 = prob(composed, e1i);
      if (p_e1 == 0) continue;
      Event intersection;
      for (const Label& z : e2a) {
        if (e1i.count(z)) intersection.insert(z);
      }
      if (prob(composed, intersection) / p_e1 != prob(second, inner)) {
        conditioning = false;
      }
    }

    // Partition by rv value; every cell has positive probability unless the
    // space has zero weights, which random_space never produces.
    RandomVar rv = random_rv(rng, s1);
    std::map<Rational, Event> cells;
    for (const Label& x : s1.outcomes()) cells[rv.at(x)].insert(x);
    std::vector<Event> partition;
    for (auto& [value, cell] : cells) partition.push_back(std::move(cell));
    if (!check_total_expectation(s1, rv, partition)) total_exp = false;

    // deferred_expectation throws if the two evaluation orders disagree.
    try {
      deferred_expectation(s1, x1, branch, branch_rvs);
    } catch (const Error&) {
      deferred = false;
    }
  }
  c.check(independence, "product independence p(e1(A) n e2(B)) = p1(A) p2(B)",
          std::to_string(instances) + " random instances");
  c.check(additivity, "expectation additivity over product spaces",
          std::to_string(instances) + " random instances");
  c.check(conditioning, "conditional compose q(e2(A)|e1(i)) = p_i(A)",
          std::to_string(instances) + " random instances");
  c.check(total_exp, "law of total expectation",
          std::to_string(instances) + " random instances");
  c.check(deferred, "deferred decision two-route agreement",
          std::to_string(instances) + " random instances");
}

void verify_space(Checker& c, const Caps& caps) {
  bool counts = true, normalized = true, matches_recurrence = true, bounds = true;
  for (long n = 0; n <= caps.enum_cap; ++n) {
    RunSpace space = enumerate_runs(n, caps.enum_cap);
    if (static_cast<long>(space.runs.size()) != catalan(n)) counts = false;
    Rational total = 0;
    for (std::size_t k = 0; k < space.runs.size(); ++k) {
      total += space.weights[k];
      long t = comparisons(space.runs[k], n);
      if (t < 0 || t > n * (n - 1) / 2) bounds = false;
    }
    if (total != 1) normalized = false;
    if (expected_comparisons_by_enumeration(n, caps.enum_cap) !=
        t_exact(n, caps.exact_cap)) {
      matches_recurrence = false;
    }
  }
  std::string range = "n <= " + std::to_string(caps.enum_cap);
  c.check(counts, "|Q_n| = Catalan(n)", range);
  c.check(normalized, "q_n sums to 1", range);
  c.check(matches_recurrence, "enumeration E(t_n) = recurrence T(n)", range);
  c.check(bounds, "t_n within [0, n(n-1)/2]", range);

  bool core_ok = true;
  long core_max = std::min<long>(8, caps.enum_cap);
  for (long n = 0; n <= core_max; ++n) {
    if (!core_matches_enumeration(n, caps.enum_cap)) core_ok = false;
  }
  c.check(core_ok, "composition primitives rebuild (Q_n, q_n)",
          "n <= " + std::to_string(core_max));
}

void verify_recurrence(Checker& c, const Caps& caps) {
  long indicator_max = std::min<long>(500, caps.exact_cap);
  bool indicator_ok = true;
  for (long n = 0; n <= indicator_max; ++n) {
    if (indicator_sum(n, caps.exact_cap) != t_exact(n, caps.exact_cap)) {
      indicator_ok = false;
    }
  }
  c.check(indicator_ok, "indicator sum 2/(j-i+1) equals T(n)",
          "n <= " + std::to_string(indicator_max));

  bool float_ok = true;
  for (long n = 0; n <= caps.exact_cap; ++n) {
    double exact = to_double(t_exact(n, caps.exact_cap));
    if (std::abs(t_float(n) - exact) / std::max(1.0, exact) > 1e-9) float_ok = false;
  }
  c.check(float_ok, "float recurrence relative error <= 1e-9",
          "n <= " + std::to_string(caps.exact_cap));

  bool monotone = true;
  for (long n = 2; n < indicator_max; ++n) {
    if (!(t_exact(n + 1, caps.exact_cap) > t_exact(n, caps.exact_cap))) monotone = false;
  }
  c.check(monotone, "T(n) strictly increasing for n >= 2",
          "n <= " + std::to_string(indicator_max));

  auto violation = bound_check(caps.bound_scan);
  c.check(!violation.has_value(), "T(n) <= 2n ln n",
          "n <= " + std::to_string(caps.bound_scan) +
              (violation ? ", first violation at n = " + std::to_string(*violation) : ""));
}

void verify_splitter(Checker& c, const Caps& caps, long n_max) {
  if (n_max > caps.enum_cap) n_max = caps.enum_cap;
  bool lemma = true, splits = true, closes = true;
  for (long n = 2; n <= n_max; ++n) {
    for (long lo = 1; lo <= n; ++lo) {
      for (long hi = lo; hi <= n; ++hi) {
        RankInterval interval{n, lo, hi};
        Rational total = 0;
        for (long q = lo; q <= hi; ++q) {
          Rational p = splitter_prob_exact(n, interval, q, caps.enum_cap);
          if (p != rat(1, interval.size())) lemma = false;
          total += p;
        }
        if (total != 1) splits = false;
      }
    }
    Rational pair_total = 0;
    for (long i = 1; i < n; ++i) {
      for (long j = i + 1; j <= n; ++j) {
        pair_total += compare_prob_exact(n, i, j, caps.enum_cap);
      }
    }
    if (pair_total != t_exact(n, caps.exact_cap)) closes = false;
  }
  std::string range = "n <= " + std::to_string(n_max) + ", all (i,j,q)";
  c.check(lemma, "splitter probability = 1/s", range);
  c.check(splits, "every interval is split (probabilities sum to 1)", range);
  c.check(closes, "sum of pair probabilities = T(n)", "n <= " + std::to_string(n_max));
}

void verify_simulator(Checker& c, const Caps& caps, long trials, std::uint64_t seed) {
  bool perm_ok = true;
  for (long n = 0; n <= caps.perm_cap; ++n) {
    if (permutation_expectation_exact(n, caps.perm_cap) != t_exact(n, caps.exact_cap)) {
      perm_ok = false;
    }
  }
  c.check(perm_ok, "permutation average = T(n)", "n <= " + std::to_string(caps.perm_cap));

  bool pmf_ok = true;
  long pmf_max = std::min<long>(7, std::min(caps.perm_cap, caps.enum_cap));
  for (long n = 0; n <= pmf_max; ++n) {
    if (deterministic_pmf(n, caps.perm_cap) != comparison_pmf(n, caps.enum_cap)) {
      pmf_ok = false;
    }
  }
  c.check(pmf_ok, "deterministic pmf = run-space pmf", "n <= " + std::to_string(pmf_max));

  bool reproducible = monte_carlo(5, 1000, seed) == monte_carlo(5, 1000, seed);
  c.check(reproducible, "monte carlo reproducibility", "n = 5, trials = 1000");

  bool band_ok = true;
  for (long n : {10L, 50L, 100L}) {
    TrialReport report = monte_carlo(n, trials, seed);
    double stderr_ = std::sqrt(report.variance / static_cast<double>(report.trials));
    if (std::abs(report.mean - t_float(n)) > 3.0 * stderr_) band_ok = false;
  }
  c.check(band_ok, "monte carlo mean within 3 stderr of T(n)",
          "n in {10,50,100}, trials = " + std::to_string(trials) +
              ", seed = " + std::to_string(seed));
}

int run_verify(const std::string& suite, const Caps& caps, long n_max, long trials,
               std::uint64_t seed) {
  Checker c;
  bool known = false;
  if (suite == "core-laws" || suite == "all") { verify_core_laws(c); known = true; }
  if (suite == "space" || suite == "all") { verify_space(c, caps); known = true; }
  if (suite == "recurrence" || suite == "all") { verify_recurrence(c, caps); known = true; }
  if (suite == "splitter" || suite == "all") { verify_splitter(c, caps, n_max); known = true; }
  if (suite == "simulator" || suite == "all") { verify_simulator(c, caps, trials, seed); known = true; }
  if (!known) {
    std::cerr << "unknown suite '" << suite
              << "' (expected core-laws, space, recurrence, splitter, simulator, all)\n";
    return 2;
  }
  std::cout << "normalized spaces constructed: " << FiniteSpace::constructed_count()
            << ", violations: 0\n";
  return c.all_passed() ? 0 : 1;
}

// ---- output helpers ----

enum class Format { kTable, kCsv, kJson };

Format parse_format(const std::string& name) {
  if (name == "table") return Format::kTable;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw CLI::ValidationError("--format", "expected table, csv or json");
}

int run_table(long n_max, Format format, const Caps& caps) {
  struct Row {
    long n;
    bool has_exact;
    Rational exact;
    double approx;
    double bound;
    bool has_catalan;
    long runs;
  };
  std::vector<Row> rows;
  for (long n = 0; n <= n_max; ++n) {
    Row row;
    row.n = n;
    row.has_exact = n <= caps.exact_cap;
    if (row.has_exact) row.exact = t_exact(n, caps.exact_cap);
    row.approx = t_float(n);
    row.bound = n >= 1 ? 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n)) : 0.0;
    row.has_catalan = n <= caps.enum_cap;
    if (row.has_catalan) row.runs = catalan(n);
    rows.push_back(row);
  }

  if (format == Format::kJson) {
    json out{{"command", "table"},
             {"parameters", {{"n_max", n_max}}},
             {"rows", json::array()}};
    for (const Row& r : rows) {
      json jr{{"n", r.n}, {"t_float", r.approx}, {"bound_2nlnn", r.bound}};
      jr["t_exact"] = r.has_exact ? rational_json(r.exact) : json(nullptr);
      jr["runs"] = r.has_catalan ? json(r.runs) : json(nullptr);
      out["rows"].push_back(jr);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (format == Format::kCsv) {
    std::cout << "n,t_exact,t_float,bound_2nlnn,runs\n";
    for (const Row& r : rows) {
      std::cout << r.n << "," << (r.has_exact ? to_fraction(r.exact) : "") << ","
                << r.approx << "," << r.bound << ","
                << (r.has_catalan ? std::to_string(r.runs) : "") << "\n";
    }
    return 0;
  }
  std::printf("%6s  %-24s %14s %14s %10s\n", "n", "T(n)", "T(n) float", "2n ln n", "|Q_n|");
  for (const Row& r : rows) {
    std::printf("%6ld  %-24s %14.6f %14.6f %10s\n", r.n,
                r.has_exact ? to_fraction(r.exact).c_str() : "-", r.approx, r.bound,
                r.has_catalan ? std::to_string(r.runs).c_str() : "-");
  }
  return 0;
}

int run_enumerate(long n, Format format, const Caps& caps) {
  RunSpace space = enumerate_runs(n, caps.enum_cap);
  if (format == Format::kJson) {
    json out{{"command", "enumerate"},
             {"parameters", {{"n", n}}},
             {"rows", json::array()}};
    for (std::size_t k = 0; k < space.runs.size(); ++k) {
      out["rows"].push_back(json{{"run", run_json(space.runs[k])},
                                 {"run_text", format_run(space.runs[k], "_")},
                                 {"weight", rational_json(space.weights[k])},
                                 {"t", comparisons(space.runs[k], n)}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (format == Format::kCsv) {
    std::cout << "run,weight,t\n";
    for (std::size_t k = 0; k < space.runs.size(); ++k) {
      std::cout << "\"" << format_run(space.runs[k], "_") << "\","
                << to_fraction(space.weights[k]) << ","
                << comparisons(space.runs[k], n) << "\n";
    }
    return 0;
  }
  for (std::size_t k = 0; k < space.runs.size(); ++k) {
    std::printf("%-40s %12s %6ld\n", format_run(space.runs[k], "⊥").c_str(),
                to_fraction(space.weights[k]).c_str(), comparisons(space.runs[k], n));
  }
  return 0;
}

int run_montecarlo(long n, long trials, std::uint64_t seed, Format format,
                   const Caps& caps) {
  TrialReport report = monte_carlo(n, trials, seed);
  double reference = t_float(n);
  double stderr_ = trials > 1 ? std::sqrt(report.variance / static_cast<double>(trials)) : 0.0;
  double z = 0.0;
  if (stderr_ > 0.0) {
    z = (report.mean - reference) / stderr_;
  } else if (report.mean != reference) {
    z = std::numeric_limits<double>::infinity();
  }
  bool has_exact = n <= caps.exact_cap;
  Rational exact;
  if (has_exact) exact = t_exact(n, caps.exact_cap);

  if (format == Format::kJson) {
    json out{{"command", "montecarlo"},
             {"parameters", {{"n", n}, {"trials", trials}, {"seed", seed}}},
             {"report",
              {{"mean", report.mean},
               {"variance", report.variance},
               {"min", report.min_count},
               {"max", report.max_count},
               {"reference", reference},
               {"reference_exact", has_exact ? rational_json(exact) : json(nullptr)},
               {"stderr", stderr_},
               {"z", z}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (format == Format::kCsv) {
    std::cout << "n,trials,seed,mean,variance,min,max,reference,stderr,z\n";
    std::cout << n << "," << trials << "," << seed << "," << report.mean << ","
              << report.variance << "," << report.min_count << "," << report.max_count
              << "," << reference << "," << stderr_ << "," << z << "\n";
    return 0;
  }
  std::printf("n = %ld, trials = %ld, seed = %llu\n", n, trials,
              static_cast<unsigned long long>(seed));
  std::printf("sample mean     %.6f\n", report.mean);
  std::printf("sample variance %.6f\n", report.variance);
  std::printf("count range     [%ld, %ld]\n", report.min_count, report.max_count);
  if (has_exact) std::printf("T(n) exact      %s\n", to_fraction(exact).c_str());
  std::printf("T(n) reference  %.6f\n", reference);
  std::printf("stderr          %.6f\n", stderr_);
  std::printf("z-score         %.4f\n", z);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the randomized-QuickSort run-space analysis"};
  app.require_subcommand(1);

  Caps caps;
  long n = 0, n_max = 8, trials = 100000;
  std::uint64_t seed = 42;
  std::string format_name = "table";
  std::string suite = "all";

  app.add_option("--cap-enum", caps.enum_cap, "enumeration cap for Q_n");
  app.add_option("--cap-exact", caps.exact_cap, "cap for the exact recurrence");
  app.add_option("--cap-perm", caps.perm_cap, "cap for permutation averaging");

  auto* verify = app.add_subcommand("verify", "run a lemma verification suite");
  verify->add_option("suite", suite,
                     "core-laws | space | recurrence | splitter | simulator | all");
  verify->add_option("--n-max", n_max, "largest n for the splitter sweep");
  verify->add_option("--trials", trials, "Monte Carlo trials");
  verify->add_option("--seed", seed, "Monte Carlo seed");

  auto* table = app.add_subcommand("table", "emit the T(n) table");
  table->add_option("--n-max", n_max, "largest n")->required();
  table->add_option("--format", format_name, "table | csv | json");

  auto* enumerate = app.add_subcommand("enumerate", "dump the run space Q_n");
  enumerate->add_option("--n", n, "problem size")->required();
  enumerate->add_option("--format", format_name, "table | csv | json");

  auto* montecarlo = app.add_subcommand("montecarlo", "seeded Monte Carlo report");
  montecarlo->add_option("--n", n, "problem size")->required();
  montecarlo->add_option("--trials", trials, "number of trials");
  montecarlo->add_option("--seed", seed, "64-bit seed");
  montecarlo->add_option("--format", format_name, "table | csv | json");

  try {
    app.parse(argc, argv);
    Format format = parse_format(format_name);
    if (verify->parsed()) return run_verify(suite, caps, n_max, trials, seed);
    if (table->parsed()) return run_table(n_max, format, caps);
    if (enumerate->parsed()) return run_enumerate(n, format, caps);
    if (montecarlo->parsed()) return run_montecarlo(n, trials, seed, format, caps);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
