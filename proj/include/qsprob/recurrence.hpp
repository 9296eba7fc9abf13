#ifndef QSPROB_RECURRENCE_HPP
#define QSPROB_RECURRENCE_HPP

#include <optional>
#include <vector>

#include "qsprob/errors.hpp"
#include "qsprob/rational.hpp"

namespace qsprob {

inline constexpr long kDefaultExactCap = 2000;

// Exact table of T(n) = E(t_n), evaluated with the prefix-sum form
// T(n) = n-1 + (2/n) * sum_{i<n} T(i); O(n) rational operations total.
class TExactTable {
 public:
  explicit TExactTable(long cap = kDefaultExactCap) : cap_(cap) {}

  const Rational& value(long n);
  long cap() const { return cap_; }

 private:
  long cap_;
  std::vector<Rational> values_{0, 0};  // T(0) = T(1) = 0
  Rational prefix_ = 0;                 // sum of values_[0..size-2]
};

// T(n) from a shared table (grows on demand, bounded by cap).
Rational t_exact(long n, long cap = kDefaultExactCap);

// Same recurrence in double precision; no cap.
double t_float(long n);

// Scans 1 <= n <= n_max for violations of T(n) <= 2n ln n (with a small
// absolute guard for the floating-point ln); returns the first violating n,
// or nothing when the bound holds everywhere.
std::optional<long> bound_check(long n_max, double guard = 1e-6);

// sum over 1 <= i < j <= n of 2/(j-i+1), grouped as
// sum_{s=2}^{n} (n-s+1) * 2/s. Exact; equals T(n).
Rational indicator_sum(long n, long cap = kDefaultExactCap);

}  // namespace qsprob

#endif  // QSPROB_RECURRENCE_HPP
