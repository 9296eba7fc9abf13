#ifndef QSPROB_PROB_CORE_HPP
#define QSPROB_PROB_CORE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsprob/errors.hpp"
#include "qsprob/rational.hpp"

namespace qsprob {

// Outcome labels are canonical strings; composite outcomes use the nested
// pair encoding "(a,b)".
using Label = std::string;

inline Label pair_label(const Label& a, const Label& b) {
  return "(" + a + "," + b + ")";
}

using Event = std::set<Label>;

// Total map from outcome labels to values. expectation() rejects random
// variables missing an outcome of their space.
using RandomVar = std::map<Label, Rational>;

// A finite probability space: distinct outcome labels with nonnegative
// exact weights summing to exactly 1. Validation runs in the constructor,
// so every live FiniteSpace is normalized. Immutable after construction.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<Label> outcomes, std::vector<Rational> weights);

  std::size_t size() const { return outcomes_.size(); }
  const std::vector<Label>& outcomes() const { return outcomes_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Label& label(std::size_t i) const { return outcomes_[i]; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }

  bool contains(const Label& s) const { return index_.count(s) != 0; }
  const Rational& weight_of(const Label& s) const;

  // Number of FiniteSpace objects successfully validated since process
  // start. Every one of them passed the exact-normalization check.
  static std::uint64_t constructed_count();

 private:
  std::vector<Label> outcomes_;
  std::vector<Rational> weights_;
  std::map<Label, std::size_t> index_;
};

FiniteSpace make_space(std::vector<Label> outcomes, std::vector<Rational> weights);

// p(A) = sum of weights over the event's labels.
Rational prob(const FiniteSpace& space, const Event& event);

// Independent joint space: labels "(a,b)", weight p1(a)*p2(b).
FiniteSpace product(const FiniteSpace& space1, const FiniteSpace& space2);

// Two-stage experiment: for every base outcome i a second space R_i.
// Outcomes "(i,a)" with weight p(i)*p_i(a); normalization re-asserted by
// the FiniteSpace constructor.
FiniteSpace conditional_compose(const FiniteSpace& base,
                                const std::map<Label, FiniteSpace>& branch);

Rational expectation(const FiniteSpace& space, const RandomVar& rv);

// E(X | A) = (1/p(A)) * sum_{s in A} p(s) X(s); requires p(A) > 0.
Rational conditional_expectation(const FiniteSpace& space, const RandomVar& rv,
                                 const Event& given);

// Law of total expectation: checks sum_i p(A_i) E(X|A_i) = E(X) for a
// partition into events of positive probability. Both sides are computed;
// returns their exact equality.
bool check_total_expectation(const FiniteSpace& space, const RandomVar& rv,
                             const std::vector<Event>& partition);

// Principle of Deferred Decision: returns E(X_0) + sum_i p(i) E(X_i) and
// asserts it equals the expectation of X(i,r) = X_0(i) + X_i(r) over the
// composed space.
Rational deferred_expectation(const FiniteSpace& base, const RandomVar& base_rv,
                              const std::map<Label, FiniteSpace>& branch,
                              const std::map<Label, RandomVar>& branch_rvs);

}  // namespace qsprob

#endif  // QSPROB_PROB_CORE_HPP
