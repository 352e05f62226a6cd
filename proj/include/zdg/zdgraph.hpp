// The zero-divisor graph of an inverse semigroup with zero: vertices are
// the nonzero elements whose meet with some other nonzero element is
// trivial, edges join pairs whose meet-set is exactly {0}. Includes the
// diameter and girth case classifications and their consistency checks.

#ifndef ZDG_ZDGRAPH_HPP_
#define ZDG_ZDGRAPH_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/check.hpp"
#include "zdg/graph.hpp"
#include "zdg/metric.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

struct ZdGraph {
  std::vector<int> vertices;  // ascending element indices
  SimpleGraph graph;          // over positions in vertices
  MetricValue diameter;
  MetricValue girth;
  bool connected = true;

  int num_vertices() const { return static_cast<int>(vertices.size()); }

  // position of element a in vertices, or -1
  int vertex_id(int a) const;

  bool adjacent_elements(int a, int b) const;
};

// Z(S) minus the zero: elements with a nonzero annihilating partner.
// Throws std::invalid_argument when s has no zero.
std::vector<int> zero_divisors(FiniteSemigroup const& s,
                               OrderStructure const& ord);

// Ann(x): all y whose meet-set with x is {0} (always contains the zero).
std::vector<int> annihilator(FiniteSemigroup const& s,
                             OrderStructure const& ord, int x);

// Nonzero elements covering the zero: down-set exactly {x, 0}.
std::vector<int> minimal_nonzero(FiniteSemigroup const& s,
                                 OrderStructure const& ord);

ZdGraph build_gamma(FiniteSemigroup const& s, OrderStructure const& ord);

enum class DiamCase {
  skipped,        // fewer than two vertices
  all_minimal,    // every vertex covers the zero -> diameter 1
  overlap,        // annihilators of non-minimal non-adjacent pairs overlap -> 2
  disjoint_pair,  // some such pair has trivially-meeting annihilators -> 3
};

std::string diam_case_label(DiamCase c);

struct DiamClassification {
  DiamCase diam_case = DiamCase::skipped;
  MetricValue predicted;  // undefined when skipped
  // a non-minimal, non-adjacent pair with Ann(x) ∩ Ann(y) = {0}, when the
  // disjoint_pair case applies
  std::optional<std::pair<int, int>> witness;
};

DiamClassification classify_diameter(FiniteSemigroup const& s,
                                     OrderStructure const& ord,
                                     ZdGraph const& g);

enum class GirthCase {
  skipped,    // fewer than two vertices
  star,       // star graph -> infinite girth
  bipartite,  // bipartite but not a star -> girth 4
  odd_cycle,  // contains an odd cycle -> girth 3
};

std::string girth_case_label(GirthCase c);

struct GirthClassification {
  GirthCase girth_case = GirthCase::skipped;
  MetricValue predicted;
};

GirthClassification classify_girth(ZdGraph const& g);

// Six-way adjacency equivalence over all distinct nonzero pairs: trivial
// meet-set, trivial intersection of left translate sets, trivial
// intersection of right translate sets, mutual annihilator membership,
// and the edge relation of gamma.
CheckResult check_adjacency_equivalences(FiniteSemigroup const& s,
                                         OrderStructure const& ord,
                                         ZdGraph const& g);

// The covering characterization of minimality: elements with down-set
// {x, 0} are exactly the minimal elements of the nonzero part.
CheckResult check_minimal_characterization(FiniteSemigroup const& s,
                                           OrderStructure const& ord);

// Connectivity, diameter in {1,2,3} (two or more vertices), and agreement
// of the case prediction with the computed diameter.
std::vector<CheckResult> check_diameter_classification(
    FiniteSemigroup const& s, OrderStructure const& ord, ZdGraph const& g);

// Girth in {3,4,inf} and agreement of the case prediction with the
// computed girth.
std::vector<CheckResult> check_girth_classification(ZdGraph const& g);

// DOT rendering with element names as labels.
std::string gamma_to_dot(FiniteSemigroup const& s, ZdGraph const& g);

}  // namespace zdg

#endif  // ZDG_ZDGRAPH_HPP_
