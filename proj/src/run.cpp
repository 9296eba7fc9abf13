#include "qsprob/run.hpp"

namespace qsprob {

namespace {

// Unchecked recursions; callers validate once at the root.
Rational probability_rec(const RunPtr& run, long n) {
  if (is_leaf(run)) return 1;
  return rat(1, n) * probability_rec(run->left, run->rank - 1) *
         probability_rec(run->right, n - run->rank);
}

long comparisons_rec(const RunPtr& run, long n) {
  if (is_leaf(run)) return 0;
  return (n - 1) + comparisons_rec(run->left, run->rank - 1) +
         comparisons_rec(run->right, n - run->rank);
}

}  // namespace

bool valid_for(const RunPtr& run, long n) {
  if (is_leaf(run)) return n == 0 || n == 1;
  if (n < 2) return false;
  if (run->rank < 1 || run->rank > n) return false;
  return valid_for(run->left, run->rank - 1) && valid_for(run->right, n - run->rank);
}

Rational run_probability(const RunPtr& run, long n) {
  if (!valid_for(run, n)) throw InvalidRun("run is not valid for size " + std::to_string(n));
  return probability_rec(run, n);
}

long comparisons(const RunPtr& run, long n) {
  if (!valid_for(run, n)) throw InvalidRun("run is not valid for size " + std::to_string(n));
  return comparisons_rec(run, n);
}

std::string format_run(const RunPtr& run, std::string_view bot) {
  if (is_leaf(run)) return std::string(bot);
  return "(" + std::to_string(run->rank) + "," + format_run(run->left, bot) + "," +
         format_run(run->right, bot) + ")";
}

std::string core_label(const RunPtr& run) {
  if (is_leaf(run)) return "_";
  return "(" + std::to_string(run->rank) + ",(" + core_label(run->left) + "," +
         core_label(run->right) + "))";
}

}  // namespace qsprob
