#ifndef QSPROB_GENERATORS_HPP
#define QSPROB_GENERATORS_HPP

#include <string>
#include <vector>

#include "qsprob/prob_core.hpp"
#include "qsprob/simulator.hpp"

namespace qsprob {

// Seeded generators of random small probability-space instances, used by
// the property checks in `verify` and in the test suites. Weights are drawn
// as random positive integers and divided by their sum, so normalization
// is exact by construction.

inline FiniteSpace random_space(SplitMix64& rng, long max_outcomes = 6,
                                const std::string& prefix = "s") {
  long k = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(max_outcomes)));
  std::vector<long> raw(static_cast<std::size_t>(k));
  long sum = 0;
  for (long& w : raw) {
    w = 1 + static_cast<long>(rng.below(20));
    sum += w;
  }
  std::vector<Label> outcomes;
  std::vector<Rational> weights;
  for (long i = 0; i < k; ++i) {
    outcomes.push_back(prefix + std::to_string(i));
    weights.push_back(rat(raw[static_cast<std::size_t>(i)], sum));
  }
  return FiniteSpace(std::move(outcomes), std::move(weights));
}

// Integer-valued rv in [-10, 10] on every outcome.
inline RandomVar random_rv(SplitMix64& rng, const FiniteSpace& space) {
  RandomVar rv;
  for (const Label& s : space.outcomes()) {
    rv[s] = static_cast<long>(rng.below(21)) - 10;
  }
  return rv;
}

// Each outcome included independently with probability 1/2.
inline Event random_event(SplitMix64& rng, const FiniteSpace& space) {
  Event event;
  for (const Label& s : space.outcomes()) {
    if (rng.below(2) == 1) event.insert(s);
  }
  return event;
}

}  // namespace qsprob

#endif  // QSPROB_GENERATORS_HPP
