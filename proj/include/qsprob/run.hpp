#ifndef QSPROB_RUN_HPP
#define QSPROB_RUN_HPP

#include <memory>
#include <string>
#include <string_view>

#include "qsprob/errors.hpp"
#include "qsprob/rational.hpp"

namespace qsprob {

// One run of QuickSort on n elements: the tree of splitter ranks chosen.
// The leaf (no further choice, subproblem size 0 or 1) is the null pointer.
// Ranks are relative to the node's own subproblem. Nodes are immutable and
// shared freely between enumerated spaces.
struct Run;
using RunPtr = std::shared_ptr<const Run>;

struct Run {
  long rank;
  RunPtr left;
  RunPtr right;
};

inline RunPtr leaf() { return nullptr; }

inline RunPtr node(long rank, RunPtr left, RunPtr right) {
  return std::make_shared<const Run>(Run{rank, std::move(left), std::move(right)});
}

inline bool is_leaf(const RunPtr& run) { return run == nullptr; }

// Leaf is valid for n in {0,1}; Node(i,l,r) for n >= 2 with 1 <= i <= n,
// l valid for i-1 and r valid for n-i.
bool valid_for(const RunPtr& run, long n);

// q_n of a single run: product of 1/(subproblem size) over internal nodes.
Rational run_probability(const RunPtr& run, long n);

// t_n of a single run: sum of (subproblem size - 1) over internal nodes.
long comparisons(const RunPtr& run, long n);

// Paper-style notation, e.g. "(1,_,(2,_,_))" with bot = "_".
std::string format_run(const RunPtr& run, std::string_view bot = "_");

// Nested-pair label "(i,(l,r))" as produced by composing uniform rank
// choice with the product of subspaces; leaf is "_". Used to compare an
// enumerated space against one built from the composition primitives.
std::string core_label(const RunPtr& run);

}  // namespace qsprob

#endif  // QSPROB_RUN_HPP
