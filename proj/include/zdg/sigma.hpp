// The least group congruence on a zero-free inverse semigroup: a and b are
// related iff ea = fb for some idempotents e, f. The quotient is a group,
// and the zero-divisor graph of the semigroup with a zero adjoined is the
// union of complete bipartite blocks between distinct classes; diameter
// and girth follow from the class structure alone.

#ifndef ZDG_SIGMA_HPP_
#define ZDG_SIGMA_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "zdg/check.hpp"
#include "zdg/metric.hpp"
#include "zdg/semigroup.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

struct SigmaPartition {
  std::vector<int> class_of;            // element index -> class id
  std::vector<std::vector<int>> classes;  // ascending; ordered by least member
  bool is_identity = false;             // every class a singleton

  int num_classes() const { return static_cast<int>(classes.size()); }
  bool related(int a, int b) const { return class_of[a] == class_of[b]; }
};

// Throws std::invalid_argument when s is not inverse, or when s has a zero
// (the relation then collapses to the universal one) unless allow_zero is
// set for demonstration purposes.
SigmaPartition sigma(FiniteSemigroup const& s, InverseVerdict const& v,
                     bool allow_zero = false);

// An inverse semigroup is a group exactly when it has a single idempotent.
bool is_group(FiniteSemigroup const& s);

// The relation is an equivalence and a two-sided congruence whose quotient
// satisfies the group axioms.
CheckResult check_sigma_group_congruence(FiniteSemigroup const& s,
                                         SigmaPartition const& sp);

// For orders <= 6: every congruence with a group quotient contains the
// computed partition. nullopt when the order is too large to enumerate.
std::optional<CheckResult> check_sigma_least(FiniteSemigroup const& s,
                                             SigmaPartition const& sp);

// For every distinct pair: not related iff adjacent in the zero-divisor
// graph of s with a zero adjoined iff the zero-extended translate sets
// intersect trivially.
CheckResult check_sigma_adjacency(FiniteSemigroup const& s,
                                  SigmaPartition const& sp);

struct BipartiteDecomposition {
  std::vector<std::pair<int, int>> blocks;  // class-id pairs, first < second
  long cross_pairs = 0;                     // total edges the blocks cover
};

// Asserts that the edge set of the adjoined-zero graph is exactly the
// union of complete bipartite blocks between distinct classes, and that
// its vertex set is all of s (two or more classes) or empty (one class).
BipartiteDecomposition verify_structure_theorem(FiniteSemigroup const& s,
                                                SigmaPartition const& sp,
                                                CheckList& checks);

// 1 when s is nontrivial with the identity relation, 2 when there are at
// least two classes and some class is not a singleton, undefined for a
// single class.
MetricValue predict_diameter_sigma(FiniteSemigroup const& s,
                                   SigmaPartition const& sp);

// With at least two classes: infinite when exactly two classes and one is
// a singleton, 4 when exactly two classes both of size >= 2, 3 for three
// or more classes; undefined otherwise.
MetricValue predict_girth_sigma(FiniteSemigroup const& s,
                                SigmaPartition const& sp);

// Predictions equal the metrics computed on the adjoined-zero graph, and
// the identity-relation and group formulations of the diameter-1 case
// agree.
std::vector<CheckResult> check_sigma_metric_predictions(
    FiniteSemigroup const& s, SigmaPartition const& sp);

}  // namespace zdg

#endif  // ZDG_SIGMA_HPP_
