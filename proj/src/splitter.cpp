#include "qsprob/splitter.hpp"

namespace qsprob {

namespace {

// Subproblem covers absolute ranks [base+1, base+m]; invariant: the target
// interval lies inside it.
long walk(const RunPtr& run, long base, long m, long lo, long hi) {
  if (m == 1) return base + 1;  // singleton subproblem, lo == hi == base+1
  long splitter = base + run->rank;
  if (splitter < lo) return walk(run->right, splitter, base + m - splitter, lo, hi);
  if (splitter > hi) return walk(run->left, base, splitter - base - 1, lo, hi);
  return splitter;
}

}  // namespace

long first_splitter_in_interval(const RunPtr& run, long n, const RankInterval& interval) {
  if (interval.n != n || !interval.valid()) {
    throw InvalidInterval("interval invalid for size " + std::to_string(n));
  }
  if (!valid_for(run, n)) throw InvalidRun("run is not valid for size " + std::to_string(n));
  return walk(run, 0, n, interval.lo, interval.hi);
}

Rational splitter_prob_exact(long n, const RankInterval& interval, long q, long cap) {
  if (interval.n != n || !interval.valid()) {
    throw InvalidInterval("interval invalid for size " + std::to_string(n));
  }
  if (q < interval.lo || q > interval.hi) {
    throw RankOutOfInterval("rank " + std::to_string(q) + " outside interval");
  }
  RunSpace space = enumerate_runs(n, cap);
  Rational total = 0;
  for (std::size_t k = 0; k < space.runs.size(); ++k) {
    if (walk(space.runs[k], 0, n, interval.lo, interval.hi) == q) {
      total += space.weights[k];
    }
  }
  return total;
}

Rational compare_prob_exact(long n, long i, long j, long cap) {
  if (!(1 <= i && i < j && j <= n)) {
    throw BadPair("require 1 <= i < j <= n");
  }
  RunSpace space = enumerate_runs(n, cap);
  Rational total = 0;
  for (std::size_t k = 0; k < space.runs.size(); ++k) {
    long first = walk(space.runs[k], 0, n, i, j);
    if (first == i || first == j) total += space.weights[k];
  }
  return total;
}

}  // namespace qsprob
