// Graph inverse semigroups of directed graphs, truncated to paths of a
// bounded length. Nonzero elements are pairs of paths with a common range
// vertex, multiplication is by prefix cancellation, and adjacency in the
// zero-divisor graph has a closed form (mutual prefix with a common
// suffix) that is validated against a brute-force translate-set oracle.

#ifndef ZDG_GRAPH_INVERSE_HPP_
#define ZDG_GRAPH_INVERSE_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/check.hpp"
#include "zdg/graph.hpp"
#include "zdg/metric.hpp"

namespace zdg {

struct DirectedGraph {
  struct Edge {
    std::string name;
    int src;
    int dst;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;  // edge ids grouped by source vertex

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int vertex_index(std::string_view name) const;

  bool is_null() const { return edges.empty(); }
  bool is_trivial() const { return num_vertices() == 1 && edges.empty(); }
  bool is_acyclic() const;
  int longest_path_length() const;  // pre: acyclic
};

DirectedGraph make_digraph(std::vector<std::string> vertices,
                           std::vector<DirectedGraph::Edge> edges);

// .dgf format, line oriented, '#' comments:
//   vertices: v1 v2 ...
//   edges:
//   name: u -> v
DirectedGraph parse_graph(std::string_view text);

std::string to_dgf(DirectedGraph const& g);

bool is_null_graph(DirectedGraph const& g);

// A path: possibly empty (a bare vertex), otherwise a composable edge
// sequence. src and dst are kept explicit so empty paths at different
// vertices stay distinct.
struct GPath {
  int src = -1;
  int dst = -1;
  std::vector<int> edges;

  static GPath empty_at(int v) { return GPath{v, v, {}}; }

  int length() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }

  friend bool operator==(GPath const& a, GPath const& b) {
    return a.src == b.src && a.edges == b.edges;
  }
};

bool path_less(GPath const& a, GPath const& b);

// whole = prefix . t for some path t
bool is_path_prefix(GPath const& prefix, GPath const& whole);

// the t with whole = prefix . t, or nullopt
std::optional<GPath> strip_path_prefix(GPath const& prefix,
                                       GPath const& whole);

GPath concat_paths(DirectedGraph const& g, GPath const& a, GPath const& b);

std::string render_path(DirectedGraph const& g, GPath const& p);

// An element p q^{-1} with range(p) = range(q); the zero is a
// distinguished value, never a path pair.
struct IgElement {
  bool is_zero = true;
  GPath p;
  GPath q;

  static IgElement zero() { return IgElement{}; }
  static IgElement from_paths(GPath p, GPath q);
  static IgElement from_path(GPath p);

  friend bool operator==(IgElement const& a, IgElement const& b) {
    if (a.is_zero || b.is_zero) {
      return a.is_zero == b.is_zero;
    }
    return a.p == b.p && a.q == b.q;
  }

  bool is_path() const { return !is_zero && q.empty(); }
  bool is_inverse_path() const { return !is_zero && p.empty(); }
  bool is_idempotent() const { return is_zero || p == q; }
  int max_length() const {
    return is_zero ? 0 : std::max(p.length(), q.length());
  }
};

bool element_less(IgElement const& a, IgElement const& b);

std::string render_element(DirectedGraph const& g, IgElement const& x);

struct PathEnumeration {
  int lmax = 0;
  bool exact = false;  // acyclic graph and lmax covers the longest path
  std::vector<GPath> paths;
};

// All paths of length <= lmax, one empty path per vertex, ordered by
// length then construction order.
PathEnumeration enumerate_paths(DirectedGraph const& g, int lmax);

struct IgEnumeration {
  int lmax = 0;
  bool exact = false;
  std::vector<IgElement> elements;  // elements[0] is the zero

  int index_of(IgElement const& x) const;  // -1 when not enumerated
};

// The zero plus every pair of enumerated paths with a common range.
IgEnumeration ig_elements(DirectedGraph const& g, int lmax);

// Exact product by prefix cancellation; zero is absorbing. The result can
// be longer than any enumeration bound.
IgElement ig_multiply(IgElement const& x, IgElement const& y);

IgElement ig_inverse(IgElement const& x);

// Natural order: x <= y iff x = (y.p t)(y.q t)^{-1} for some path t (or
// x is the zero, or x == y).
bool ig_leq(IgElement const& x, IgElement const& y);

// Closed-form adjacency in the zero-divisor graph: distinct nonzero x, y
// are NOT adjacent iff one is obtained from the other by extending both
// path components with one common suffix. Throws std::invalid_argument on
// zero or identical inputs.
bool ig_adjacent(IgElement const& x, IgElement const& y);

// Brute-force translate set { (a a^{-1}) x : a a path of length <= alpha_lmax }
// together with the zero; sorted, duplicates removed.
std::vector<IgElement> idempotent_translate(DirectedGraph const& g,
                                            int alpha_lmax,
                                            IgElement const& x);

// Oracle adjacency: translate sets (alpha bounded by
// |x.p| + |y.p| + lmax) intersect in the zero only.
bool ig_adjacent_oracle(DirectedGraph const& g, int lmax, IgElement const& x,
                        IgElement const& y);

struct IgGamma {
  IgEnumeration enumeration;
  std::vector<IgElement> vertices;  // the nonzero enumerated elements
  SimpleGraph graph;
  MetricValue diameter;  // distances routed through a one-longer pool
  MetricValue girth;
  bool connected = true;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  bool exact() const { return enumeration.exact; }
};

IgGamma build_gamma_ig(DirectedGraph const& g, int lmax);

struct IgPrediction {
  MetricValue diameter;
  MetricValue girth;
};

// (1, inf) for a null graph on two vertices, (1, 3) for a null graph on
// three or more, (2, 3) as soon as there is an edge. Throws
// std::invalid_argument for the trivial graph, whose semigroup has no
// zero-divisors.
IgPrediction classify_ig(DirectedGraph const& g);

std::string ig_gamma_to_dot(DirectedGraph const& g, IgGamma const& gamma);

// Multiplication table over the enumerated elements; -1 marks products
// whose paths overflow the enumeration bound.
std::vector<std::vector<int>> ig_product_table(IgEnumeration const& e);

// Closed form versus oracle on every distinct nonzero enumerated pair.
CheckResult check_ig_adjacency_oracle(DirectedGraph const& g,
                                      IgEnumeration const& e);

// Paths and inverse paths induce a complete subgraph.
CheckResult check_ig_paths_complete(IgGamma const& gamma);

// Every nonzero enumerated element of a non-trivial graph is a vertex
// with at least one neighbour.
CheckResult check_ig_all_vertices(DirectedGraph const& g,
                                  IgGamma const& gamma);

// (table[i][j]) k = i (table[j][k]) on every triple whose pairwise and
// triple products stay within the enumeration bound.
CheckResult check_ig_associativity(IgEnumeration const& e);

// x x^{-1} x = x and (x^{-1})^{-1} = x for every enumerated element, and
// the idempotents are exactly the zero and the pairs with equal components.
CheckResult check_ig_inverse_laws(IgEnumeration const& e);

// Exact enumerations only: diameter in {1,2} with the null-graph /
// minimality / comparability characterizations, girth in {3,inf} with the
// vertex-count characterization, and the case prediction matching the
// computed metrics.
std::vector<CheckResult> check_ig_metric_theorems(DirectedGraph const& g,
                                                  IgGamma const& gamma);

}  // namespace zdg

#endif  // ZDG_GRAPH_INVERSE_HPP_
