#include "qsprob/quicksort_space.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace qsprob {

long catalan(long n) {
  if (n < 0) throw Error("catalan: negative n");
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  if (n >= 1) c[1] = 1;
  for (long m = 2; m <= n; ++m) {
    long total = 0;
    for (long i = 1; i <= m; ++i) total += c[i - 1] * c[m - i];
    c[m] = total;
  }
  return c[n];
}

namespace {

// Runs of every size up to n, smallest first. Subtrees are shared.
std::vector<std::vector<RunPtr>> runs_by_size(long n) {
  std::vector<std::vector<RunPtr>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {leaf()};
  if (n >= 1) table[1] = {leaf()};
  for (long m = 2; m <= n; ++m) {
    auto& out = table[m];
    for (long i = 1; i <= m; ++i) {
      for (const RunPtr& l : table[i - 1]) {
        for (const RunPtr& r : table[m - i]) {
          out.push_back(node(i, l, r));
        }
      }
    }
  }
  return table;
}

void check_cap(long n, long cap) {
  if (n < 0) throw Error("negative problem size");
  if (n > cap) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds enumeration cap " +
                   std::to_string(cap));
  }
}

}  // namespace

RunSpace enumerate_runs(long n, long cap) {
  check_cap(n, cap);
  RunSpace space;
  space.n = n;
  space.runs = std::move(runs_by_size(n)[n]);
  space.weights.reserve(space.runs.size());
  Rational total = 0;
  for (const RunPtr& run : space.runs) {
    space.weights.push_back(run_probability(run, n));
    total += space.weights.back();
  }
  if (static_cast<long>(space.runs.size()) != catalan(n)) {
    throw Error("enumeration size != Catalan(n)");
  }
  if (total != 1) throw NotNormalized("run weights sum to " + to_fraction(total));
  return space;
}

Rational expected_comparisons_by_enumeration(long n, long cap) {
  RunSpace space = enumerate_runs(n, cap);
  Rational total = 0;
  for (std::size_t k = 0; k < space.runs.size(); ++k) {
    total += space.weights[k] * comparisons(space.runs[k], n);
  }
  return total;
}

namespace {

const FiniteSpace& core_space(long m, std::vector<std::optional<FiniteSpace>>& memo) {
  auto& slot = memo[m];
  if (slot) return *slot;
  if (m < 2) {
    slot.emplace(std::vector<Label>{"_"}, std::vector<Rational>{1});
    return *slot;
  }
  std::vector<Label> ranks;
  std::vector<Rational> uniform;
  std::map<Label, FiniteSpace> branch;
  for (long i = 1; i <= m; ++i) {
    Label rank = std::to_string(i);
    ranks.push_back(rank);
    uniform.push_back(rat(1, m));
    branch.emplace(rank, product(core_space(i - 1, memo), core_space(m - i, memo)));
  }
  FiniteSpace base(std::move(ranks), std::move(uniform));
  slot.emplace(conditional_compose(base, branch));
  return *slot;
}

}  // namespace

FiniteSpace build_via_core(long n, long cap) {
  check_cap(n, cap);
  std::vector<std::optional<FiniteSpace>> memo(static_cast<std::size_t>(n) + 1);
  return core_space(n, memo);
}

bool core_matches_enumeration(long n, long cap) {
  FiniteSpace via_core = build_via_core(n, cap);
  RunSpace enumerated = enumerate_runs(n, cap);

  std::vector<std::pair<Label, Rational>> lhs, rhs;
  for (std::size_t i = 0; i < via_core.size(); ++i) {
    lhs.emplace_back(via_core.label(i), via_core.weight(i));
  }
  for (std::size_t k = 0; k < enumerated.runs.size(); ++k) {
    rhs.emplace_back(core_label(enumerated.runs[k]), enumerated.weights[k]);
  }
  auto by_label = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(lhs.begin(), lhs.end(), by_label);
  std::sort(rhs.begin(), rhs.end(), by_label);
  return lhs == rhs;
}

std::map<long, Rational> comparison_pmf(long n, long cap) {
  RunSpace space = enumerate_runs(n, cap);
  std::map<long, Rational> pmf;
  for (std::size_t k = 0; k < space.runs.size(); ++k) {
    pmf[comparisons(space.runs[k], n)] += space.weights[k];
  }
  return pmf;
}

}  // namespace qsprob
