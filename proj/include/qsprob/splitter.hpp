#ifndef QSPROB_SPLITTER_HPP
#define QSPROB_SPLITTER_HPP

#include "qsprob/quicksort_space.hpp"
#include "qsprob/run.hpp"

namespace qsprob {

// Interval of absolute ranks [lo, hi] within a problem of size n.
struct RankInterval {
  long n;
  long lo;
  long hi;

  long size() const { return hi - lo + 1; }
  bool valid() const { return 1 <= lo && lo <= hi && hi <= n; }
};

// The rank in [lo, hi] chosen first as a splitter among the interval's
// elements in the given run. Node ranks are relative to their subproblem;
// the walk carries the offset. Always terminates with a rank in the
// interval (every run splits every interval).
long first_splitter_in_interval(const RunPtr& run, long n, const RankInterval& interval);

// p_n(x_q, i, j): probability over (Q_n, q_n) that rank q is chosen first
// within the interval. Equals 1/size exactly (verified by enumeration).
Rational splitter_prob_exact(long n, const RankInterval& interval, long q,
                             long cap = kDefaultEnumCap);

// Probability that ranks i and j are ever compared: first splitter in
// [i, j] is one of the endpoints. Equals 2/(j-i+1).
Rational compare_prob_exact(long n, long i, long j, long cap = kDefaultEnumCap);

}  // namespace qsprob

#endif  // QSPROB_SPLITTER_HPP
