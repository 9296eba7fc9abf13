#ifndef QSPROB_QUICKSORT_SPACE_HPP
#define QSPROB_QUICKSORT_SPACE_HPP

#include <map>
#include <vector>

#include "qsprob/prob_core.hpp"
#include "qsprob/run.hpp"

namespace qsprob {

inline constexpr long kDefaultEnumCap = 12;

// The exhaustively enumerated space (Q_n, q_n): Catalan(n) runs, weights
// summing to exactly 1 (checked at construction).
struct RunSpace {
  long n;
  std::vector<RunPtr> runs;
  std::vector<Rational> weights;
};

// Catalan number C_n via C_0 = C_1 = 1, C_n = sum_i C_{i-1} C_{n-i}.
long catalan(long n);

// All runs of size n in deterministic order: root ranks ascending, then
// left subruns in enumeration order, then right.
RunSpace enumerate_runs(long n, long cap = kDefaultEnumCap);

// E(t_n) computed directly as sum q_n(run) * t_n(run) over the enumeration,
// independent of the recurrence.
Rational expected_comparisons_by_enumeration(long n, long cap = kDefaultEnumCap);

// Q_n built from the composition primitives: uniform rank choice composed
// with the product of the two subspaces. Distribution-identical to
// enumerate_runs(n); outcome labels are the nested-pair encoding.
FiniteSpace build_via_core(long n, long cap = kDefaultEnumCap);

// Checks that build_via_core(n) and enumerate_runs(n) define the same
// distribution (same label multiset under core_label, same weights).
bool core_matches_enumeration(long n, long cap = kDefaultEnumCap);

// Exact pmf of t_n over (Q_n, q_n).
std::map<long, Rational> comparison_pmf(long n, long cap = kDefaultEnumCap);

}  // namespace qsprob

#endif  // QSPROB_QUICKSORT_SPACE_HPP
