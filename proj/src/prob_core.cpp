#include "qsprob/prob_core.hpp"

#include <atomic>
#include <utility>

namespace qsprob {

namespace {
std::atomic<std::uint64_t> g_constructed{0};
}  // namespace

FiniteSpace::FiniteSpace(std::vector<Label> outcomes, std::vector<Rational> weights)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)) {
  if (outcomes_.empty()) throw EmptySpace("space has no outcomes");
  if (outcomes_.size() != weights_.size()) {
    throw Error("outcome and weight lists differ in length");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (weights_[i] < 0) {
      throw NegativeWeight("negative weight for outcome " + outcomes_[i]);
    }
    if (!index_.emplace(outcomes_[i], i).second) {
      throw DuplicateLabel("duplicate outcome " + outcomes_[i]);
    }
    total += weights_[i];
  }
  if (total != 1) {
    throw NotNormalized("weights sum to " + to_fraction(total) + ", expected 1");
  }
  ++g_constructed;
}

std::uint64_t FiniteSpace::constructed_count() { return g_constructed.load(); }

const Rational& FiniteSpace::weight_of(const Label& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw UnknownLabel("no outcome " + s);
  return weights_[it->second];
}

FiniteSpace make_space(std::vector<Label> outcomes, std::vector<Rational> weights) {
  return FiniteSpace(std::move(outcomes), std::move(weights));
}

Rational prob(const FiniteSpace& space, const Event& event) {
  Rational total = 0;
  for (const Label& s : event) total += space.weight_of(s);
  return total;
}

FiniteSpace product(const FiniteSpace& space1, const FiniteSpace& space2) {
  std::vector<Label> outcomes;
  std::vector<Rational> weights;
  outcomes.reserve(space1.size() * space2.size());
  weights.reserve(space1.size() * space2.size());
  for (std::size_t i = 0; i < space1.size(); ++i) {
    for (std::size_t j = 0; j < space2.size(); ++j) {
      outcomes.push_back(pair_label(space1.label(i), space2.label(j)));
      weights.push_back(space1.weight(i) * space2.weight(j));
    }
  }
  return FiniteSpace(std::move(outcomes), std::move(weights));
}

FiniteSpace conditional_compose(const FiniteSpace& base,
                                const std::map<Label, FiniteSpace>& branch) {
  std::vector<Label> outcomes;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto it = branch.find(base.label(i));
    if (it == branch.end()) {
      throw MissingBranch("no second experiment for outcome " + base.label(i));
    }
    const FiniteSpace& second = it->second;
    for (std::size_t a = 0; a < second.size(); ++a) {
      outcomes.push_back(pair_label(base.label(i), second.label(a)));
      weights.push_back(base.weight(i) * second.weight(a));
    }
  }
  return FiniteSpace(std::move(outcomes), std::move(weights));
}

namespace {

const Rational& rv_value(const RandomVar& rv, const Label& s) {
  auto it = rv.find(s);
  if (it == rv.end()) throw UndefinedOutcome("random variable undefined on " + s);
  return it->second;
}

}  // namespace

Rational expectation(const FiniteSpace& space, const RandomVar& rv) {
  Rational total = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    total += space.weight(i) * rv_value(rv, space.label(i));
  }
  return total;
}

Rational conditional_expectation(const FiniteSpace& space, const RandomVar& rv,
                                 const Event& given) {
  Rational p_a = prob(space, given);
  if (p_a == 0) throw ImpossibleCondition("conditioning event has probability 0");
  Rational total = 0;
  for (const Label& s : given) total += space.weight_of(s) * rv_value(rv, s);
  return total / p_a;
}

bool check_total_expectation(const FiniteSpace& space, const RandomVar& rv,
                             const std::vector<Event>& partition) {
  Event seen;
  for (const Event& cell : partition) {
    for (const Label& s : cell) {
      if (!space.contains(s)) throw UnknownLabel("no outcome " + s);
      if (!seen.insert(s).second) {
        throw NotAPartition("cells are not disjoint at " + s);
      }
    }
    if (prob(space, cell) == 0) throw ImpossibleCell("partition cell has probability 0");
  }
  if (seen.size() != space.size()) {
    throw NotAPartition("cells do not cover the sample space");
  }
  Rational lhs = 0;
  for (const Event& cell : partition) {
    lhs += prob(space, cell) * conditional_expectation(space, rv, cell);
  }
  return lhs == expectation(space, rv);
}

Rational deferred_expectation(const FiniteSpace& base, const RandomVar& base_rv,
                              const std::map<Label, FiniteSpace>& branch,
                              const std::map<Label, RandomVar>& branch_rvs) {
  Rational result = expectation(base, base_rv);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Label& s = base.label(i);
    auto sp = branch.find(s);
    auto rv = branch_rvs.find(s);
    if (sp == branch.end() || rv == branch_rvs.end()) {
      throw MissingBranch("no second experiment for outcome " + s);
    }
    result += base.weight(i) * expectation(sp->second, rv->second);
  }

  // Cross-check against the composed space with X(i,r) = X_0(i) + X_i(r).
  FiniteSpace composed = conditional_compose(base, branch);
  RandomVar combined;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Label& s = base.label(i);
    const FiniteSpace& second = branch.at(s);
    const RandomVar& second_rv = branch_rvs.at(s);
    for (std::size_t a = 0; a < second.size(); ++a) {
      combined[pair_label(s, second.label(a))] =
          rv_value(base_rv, s) + rv_value(second_rv, second.label(a));
    }
  }
  if (expectation(composed, combined) != result) {
    throw Error("deferred decision mismatch against composed-space expectation");
  }
  return result;
}

}  // namespace qsprob
