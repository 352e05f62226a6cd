// Ready-made semigroups and digraphs: the five-element Brandt semigroup,
// cyclic groups, the symmetric group on three points, symmetric inverse
// monoids of partial injections, Clifford semigroups over a chain of
// idempotents, the three reference digraphs, and the seeded random
// corpora the verification harness consumes.

#ifndef ZDG_GENERATORS_HPP_
#define ZDG_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "zdg/graph_inverse.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

// 0, e, f, a, b with a b = e, b a = f, a a = b b = 0.
FiniteSemigroup make_b2();

// Elements "1", "g1", ..., "g{n-1}"; n >= 1.
FiniteSemigroup make_cyclic_group(int n);

// The symmetric group on {1,2,3} in cycle notation.
FiniteSemigroup make_s3();

// All partial injections on {1..n}, n <= 3, composed left to right;
// element names render the map, e.g. "[1>2,2>1]", the empty map "[]" is
// the zero. Ordered by (rank, lexicographic map).
FiniteSemigroup make_symmetric_inverse_monoid(int n);

// A chain of idempotent levels (top first), a cyclic group of the given
// order at each level, and linking homomorphisms sending the generator of
// level i to hom_params[i] in level i+1 (0 = trivial hom). Requires
// orders[i] * hom_params[i] = 0 modulo orders[i+1]. hom_params may be
// empty, meaning all trivial. The result is zero-free exactly when the
// bottom group is nontrivial.
FiniteSemigroup make_clifford_chain(std::vector<int> const& orders,
                                    std::vector<int> const& hom_params = {});

DirectedGraph make_digraph_g1();  // two isolated vertices
DirectedGraph make_digraph_g2();  // three isolated vertices
DirectedGraph make_digraph_g3();  // w1 -e-> w2

struct RandomDigraphParams {
  int max_vertices = 5;
  int max_edges = 6;
  int lmax = 3;            // bound used for the element-count cap
  int max_elements = 250;  // resample graphs whose enumeration is larger
};

DirectedGraph random_digraph(std::mt19937_64& rng,
                             RandomDigraphParams const& params);

// The sub-table of parent on a subset of indices that is closed under
// products; element names are inherited. Throws when the subset is not
// closed.
FiniteSemigroup sub_semigroup(FiniteSemigroup const& parent,
                              std::vector<int> const& subset);

// Closure of a random subset of the symmetric inverse monoid on n points
// under products and inverses; always contains the empty map and at least
// one more element, so the result is an inverse semigroup with zero.
FiniteSemigroup random_inverse_subsemigroup(std::mt19937_64& rng, int n);

// All Clifford chains with at most three levels, group orders in {1,2,3},
// a nontrivial bottom group (zero-freeness) and every valid assignment of
// linking homomorphisms.
std::vector<FiniteSemigroup> all_small_zero_free_clifford_chains();

}  // namespace zdg

#endif  // ZDG_GENERATORS_HPP_
