#ifndef QSPROB_SIMULATOR_HPP
#define QSPROB_SIMULATOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qsprob/errors.hpp"
#include "qsprob/rational.hpp"

namespace qsprob {

inline constexpr long kDefaultPermCap = 8;

// SplitMix64 (Steele, Lea, Flood). 64-bit state, one mix per output.
// Specified here so reports are reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Per-trial substream: an independent SplitMix64 stream seeded from the
// trial index. substream_seed(seed, t) = mix(seed XOR golden*(t+1)) where
// mix is the SplitMix64 output function.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial);

struct TrialReport {
  long n = 0;
  long trials = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance; 0 when trials == 1
  std::uint64_t seed = 0;
  long min_count = 0;
  long max_count = 0;

  bool operator==(const TrialReport&) const = default;
};

// Comparison count of one randomized-QuickSort execution: each recursive
// call on m >= 2 elements draws a splitter uniformly and costs exactly
// m-1 comparisons. Items must be pairwise distinct.
long randomized_quicksort_count(const std::vector<long>& items, SplitMix64& rng);
long randomized_quicksort_count(const std::vector<long>& items, std::uint64_t seed);

// Deterministic variant: the first element is always the splitter.
long deterministic_quicksort_count(const std::vector<long>& items);

// Repeated randomized runs on the identity input 1..n with per-trial
// substreams. Bit-for-bit reproducible given (n, trials, seed).
TrialReport monte_carlo(long n, long trials, std::uint64_t seed);

// Average of deterministic_quicksort_count over all n! permutations, exact.
Rational permutation_expectation_exact(long n, long cap = kDefaultPermCap);

// Exact pmf of the deterministic count over uniform permutations.
std::map<long, Rational> deterministic_pmf(long n, long cap = kDefaultPermCap);

}  // namespace qsprob

#endif  // QSPROB_SIMULATOR_HPP
