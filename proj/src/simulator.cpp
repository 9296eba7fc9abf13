#include "qsprob/simulator.hpp"

#include <algorithm>
#include <numeric>

namespace qsprob {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error("below: zero bound");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void require_distinct(const std::vector<long>& items) {
  std::vector<long> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateItems("input items must be pairwise distinct");
  }
}

// Partition around the element at splitter_index; m-1 comparisons.
long quicksort_count_rec(std::vector<long> items, SplitMix64* rng) {
  if (items.size() < 2) return 0;
  std::size_t splitter_index = rng ? static_cast<std::size_t>(rng->below(items.size())) : 0;
  long splitter = items[splitter_index];
  std::vector<long> less, greater;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k == splitter_index) continue;
    (items[k] < splitter ? less : greater).push_back(items[k]);
  }
  long count = static_cast<long>(items.size()) - 1;
  return count + quicksort_count_rec(std::move(less), rng) +
         quicksort_count_rec(std::move(greater), rng);
}

}  // namespace

long randomized_quicksort_count(const std::vector<long>& items, SplitMix64& rng) {
  require_distinct(items);
  return quicksort_count_rec(items, &rng);
}

long randomized_quicksort_count(const std::vector<long>& items, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return randomized_quicksort_count(items, rng);
}

long deterministic_quicksort_count(const std::vector<long>& items) {
  require_distinct(items);
  return quicksort_count_rec(items, nullptr);
}

TrialReport monte_carlo(long n, long trials, std::uint64_t seed) {
  if (n < 0) throw Error("monte_carlo: negative n");
  if (trials < 1) throw ZeroTrials("monte_carlo: trials must be >= 1");

  std::vector<long> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 1);

  // Integer accumulators keep the aggregation exact; the report is
  // bit-for-bit reproducible given (n, trials, seed).
  unsigned long long sum = 0, sum_sq = 0;
  long min_count = 0, max_count = 0;
  for (long t = 0; t < trials; ++t) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(t)));
    long c = quicksort_count_rec(identity, &rng);
    sum += static_cast<unsigned long long>(c);
    sum_sq += static_cast<unsigned long long>(c) * static_cast<unsigned long long>(c);
    if (t == 0 || c < min_count) min_count = c;
    if (t == 0 || c > max_count) max_count = c;
  }

  TrialReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.min_count = min_count;
  report.max_count = max_count;
  double ft = static_cast<double>(trials);
  report.mean = static_cast<double>(sum) / ft;
  if (trials > 1) {
    double centered = static_cast<double>(sum_sq) - static_cast<double>(sum) * report.mean;
    report.variance = std::max(0.0, centered / (ft - 1.0));
  }
  return report;
}

Rational permutation_expectation_exact(long n, long cap) {
  if (n < 0) throw Error("negative n");
  if (n > cap) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds permutation cap " +
                   std::to_string(cap));
  }
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long total = 0;
  long factorial = 0;
  do {
    total += quicksort_count_rec(perm, nullptr);
    ++factorial;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rat(total, factorial);
}

std::map<long, Rational> deterministic_pmf(long n, long cap) {
  if (n < 0) throw Error("negative n");
  if (n > cap) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds permutation cap " +
                   std::to_string(cap));
  }
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::map<long, long> counts;
  long factorial = 0;
  do {
    ++counts[quicksort_count_rec(perm, nullptr)];
    ++factorial;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<long, Rational> pmf;
  for (const auto& [count, occurrences] : counts) {
    pmf[count] = rat(occurrences, factorial);
  }
  return pmf;
}

}  // namespace qsprob
