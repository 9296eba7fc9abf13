#include "qsprob/recurrence.hpp"

#include <cmath>
#include <mutex>

namespace qsprob {

const Rational& TExactTable::value(long n) {
  if (n < 0) throw Error("t_exact: negative n");
  if (n > cap_) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds exact cap " +
                   std::to_string(cap_));
  }
  while (static_cast<long>(values_.size()) <= n) {
    long m = static_cast<long>(values_.size());
    Rational t = (m - 1) + rat(2, m) * prefix_;
    prefix_ += t;
    values_.push_back(std::move(t));
  }
  return values_[n];
}

Rational t_exact(long n, long cap) {
  static TExactTable table(kDefaultExactCap);
  static std::mutex mutex;
  if (n > cap) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds exact cap " +
                   std::to_string(cap));
  }
  std::lock_guard<std::mutex> lock(mutex);
  if (cap > table.cap()) table = TExactTable(cap);
  return table.value(n);
}

double t_float(long n) {
  if (n < 0) throw Error("t_float: negative n");
  static std::vector<double> values{0.0, 0.0};
  static double prefix = 0.0;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long>(values.size()) <= n) {
    long m = static_cast<long>(values.size());
    double t = static_cast<double>(m - 1) + 2.0 / static_cast<double>(m) * prefix;
    prefix += t;
    values.push_back(t);
  }
  return values[n];
}

std::optional<long> bound_check(long n_max, double guard) {
  if (n_max < 1) throw Error("bound_check: n_max must be >= 1");
  t_float(n_max);  // fill the table once
  for (long n = 1; n <= n_max; ++n) {
    double bound = 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n));
    if (t_float(n) > bound + guard) return n;
  }
  return std::nullopt;
}

Rational indicator_sum(long n, long cap) {
  if (n < 0) throw Error("indicator_sum: negative n");
  if (n > cap) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds exact cap " +
                   std::to_string(cap));
  }
  Rational total = 0;
  for (long s = 2; s <= n; ++s) total += rat(2 * (n - s + 1), s);
  return total;
}

}  // namespace qsprob
