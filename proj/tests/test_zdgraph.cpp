#include <doctest.h>

#include <algorithm>

#include "zdg/generators.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

namespace {

struct Context {
  FiniteSemigroup s;
  InverseVerdict v;
  OrderStructure ord;

  explicit Context(FiniteSemigroup input) : s(std::move(input)) {
    REQUIRE(!associativity_violation(s).has_value());
    v = verify_inverse(s);
    REQUIRE(v.is_inverse);
    ord = natural_order(s, v);
  }
};

std::vector<int> indices(FiniteSemigroup const& s,
                         std::vector<std::string> const& names) {
  std::vector<int> out;
  for (auto const& n : names) {
    int const i = s.index_of(n);
    REQUIRE(i >= 0);
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// brute-force zero-divisor oracle straight from the order matrix
std::vector<int> zero_divisors_oracle(FiniteSemigroup const& s,
                                      OrderStructure const& ord) {
  int const z = *s.zero;
  auto meet_trivial = [&](int a, int b) {
    for (int c = 0; c < s.order(); ++c) {
      if (c != z && ord.leq[c][a] && ord.leq[c][b]) {
        return false;
      }
    }
    return true;
  };
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) {
    if (a == z) {
      continue;
    }
    for (int b = 0; b < s.order(); ++b) {
      if (b != z && b != a && meet_trivial(a, b)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

// chain semilattice 0 < f < e
FiniteSemigroup make_chain3() {
  return make_semigroup({"0", "f", "e"},
                        {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}, 0);
}

}  // namespace

TEST_SUITE("zdgraph") {
  TEST_CASE("zero divisors of the Brandt semigroup") {
    Context c(make_b2());
    CHECK(zero_divisors(c.s, c.ord) == indices(c.s, {"e", "f", "a", "b"}));
    CHECK(zero_divisors(c.s, c.ord) == zero_divisors_oracle(c.s, c.ord));
  }

  TEST_CASE("a chain semilattice has no zero divisors") {
    Context c(make_chain3());
    CHECK(zero_divisors(c.s, c.ord).empty());
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 0);
    CHECK(g.diameter == MetricValue::undefined());
    CHECK(g.girth == MetricValue::undefined());
    CHECK(classify_diameter(c.s, c.ord, g).diam_case == DiamCase::skipped);
    CHECK(annihilator(c.s, c.ord, c.s.index_of("e"))
          == std::vector<int>{*c.s.zero});
    CHECK(minimal_nonzero(c.s, c.ord) == indices(c.s, {"f"}));
  }

  TEST_CASE("zero divisors need a zero") {
    Context c(make_cyclic_group(3));
    CHECK_THROWS_AS(zero_divisors(c.s, c.ord), std::invalid_argument);
  }

  TEST_CASE("annihilators in the Brandt semigroup") {
    Context c(make_b2());
    int const a = c.s.index_of("a");
    CHECK(annihilator(c.s, c.ord, a) == indices(c.s, {"0", "e", "f", "b"}));
    // the zero annihilates everything
    std::vector<int> everything(c.s.order());
    for (int i = 0; i < c.s.order(); ++i) {
      everything[i] = i;
    }
    CHECK(annihilator(c.s, c.ord, *c.s.zero) == everything);
  }

  TEST_CASE("gamma of the Brandt semigroup is complete on four vertices") {
    Context c(make_b2());
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.vertices == indices(c.s, {"e", "f", "a", "b"}));
    CHECK(g.graph.edge_count() == 6);
    CHECK(g.diameter == MetricValue::finite(1));
    CHECK(g.girth == MetricValue::finite(3));
    CHECK(g.connected);
    CHECK(minimal_nonzero(c.s, c.ord) == g.vertices);

    auto diam_cls = classify_diameter(c.s, c.ord, g);
    CHECK(diam_cls.diam_case == DiamCase::all_minimal);
    CHECK(diam_cls.predicted == MetricValue::finite(1));
    auto girth_cls = classify_girth(g);
    CHECK(girth_cls.girth_case == GirthCase::odd_cycle);
    CHECK(girth_cls.predicted == MetricValue::finite(3));

    CHECK(check_adjacency_equivalences(c.s, c.ord, g).pass);
    CHECK(check_minimal_characterization(c.s, c.ord).pass);
    for (auto const& r : check_diameter_classification(c.s, c.ord, g)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    for (auto const& r : check_girth_classification(g)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }

  TEST_CASE("gamma of a group with a zero adjoined is complete") {
    Context c(adjoin_zero(make_cyclic_group(2)));
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 2);
    CHECK(g.graph.edge_count() == 1);
    CHECK(g.diameter == MetricValue::finite(1));
    CHECK(g.girth == MetricValue::infinite());
    CHECK(minimal_nonzero(c.s, c.ord) == g.vertices);
    CHECK(classify_diameter(c.s, c.ord, g).diam_case
          == DiamCase::all_minimal);
    CHECK(classify_girth(g).girth_case == GirthCase::star);
  }

  TEST_CASE("the full symmetric inverse monoid on two points") {
    Context c(make_symmetric_inverse_monoid(2));
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 6);  // every nonzero element
    CHECK(g.diameter == MetricValue::finite(2));
    CHECK(g.girth == MetricValue::finite(3));
    CHECK(minimal_nonzero(c.s, c.ord)
          == indices(c.s, {"[1>1]", "[1>2]", "[2>1]", "[2>2]"}));
    auto diam_cls = classify_diameter(c.s, c.ord, g);
    CHECK(diam_cls.diam_case == DiamCase::overlap);
    CHECK(check_adjacency_equivalences(c.s, c.ord, g).pass);
    for (auto const& r : check_diameter_classification(c.s, c.ord, g)) {
      CHECK(r.pass);
    }
    for (auto const& r : check_girth_classification(g)) {
      CHECK(r.pass);
    }
  }

  TEST_CASE("two-by-two bipartite case via a Clifford square") {
    // two classes of size two once a zero is adjoined
    Context c(adjoin_zero(make_clifford_chain({2, 2}, {1})));
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 4);
    CHECK(g.graph.edge_count() == 4);
    CHECK(g.diameter == MetricValue::finite(2));
    CHECK(g.girth == MetricValue::finite(4));
    CHECK(classify_girth(g).girth_case == GirthCase::bipartite);
    CHECK(classify_diameter(c.s, c.ord, g).diam_case == DiamCase::overlap);
    for (auto const& r : check_diameter_classification(c.s, c.ord, g)) {
      CHECK(r.pass);
    }
  }

  TEST_CASE("a semilattice with annihilator-disjoint pair reaches diameter 3") {
    // subsets {}, {1}, {2}, {3}, {1,2}, {2,3} under intersection; the two
    // doubletons overlap in {2} but share no nonzero annihilator
    auto s = make_semigroup(
        {"o", "s1", "s2", "s3", "s12", "s23"},
        {
            {0, 0, 0, 0, 0, 0},  // o
            {0, 1, 0, 0, 1, 0},  // s1
            {0, 0, 2, 0, 2, 2},  // s2
            {0, 0, 0, 3, 0, 3},  // s3
            {0, 1, 2, 0, 4, 2},  // s12
            {0, 0, 2, 3, 2, 5},  // s23
        },
        0);
    Context c(s);
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 5);
    CHECK(g.diameter == MetricValue::finite(3));
    CHECK(g.girth == MetricValue::finite(3));
    CHECK(minimal_nonzero(c.s, c.ord) == indices(c.s, {"s1", "s2", "s3"}));
    auto cls = classify_diameter(c.s, c.ord, g);
    CHECK(cls.diam_case == DiamCase::disjoint_pair);
    CHECK(cls.predicted == MetricValue::finite(3));
    REQUIRE(cls.witness.has_value());
    auto const [x, y] = *cls.witness;
    CHECK(indices(c.s, {"s12", "s23"}) == std::vector<int>{
        std::min(x, y), std::max(x, y)});
    CHECK(check_adjacency_equivalences(c.s, c.ord, g).pass);
    for (auto const& r : check_diameter_classification(c.s, c.ord, g)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    for (auto const& r : check_girth_classification(g)) {
      CHECK(r.pass);
    }
  }

  TEST_CASE("the full symmetric inverse monoid on three points") {
    Context c(make_symmetric_inverse_monoid(3));
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 33);  // every nonzero element
    CHECK(g.connected);
    CHECK(check_adjacency_equivalences(c.s, c.ord, g).pass);
    CHECK(check_minimal_characterization(c.s, c.ord).pass);
    for (auto const& r : check_diameter_classification(c.s, c.ord, g)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    for (auto const& r : check_girth_classification(g)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }

  TEST_CASE("vertices are exactly the elements with a trivial meet partner") {
    // diamond semilattice 0 < x, y < t: the top meets both atoms above 0,
    // so it is not a vertex
    auto diamond = make_semigroup(
        {"0", "x", "y", "t"},
        {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}, 0);
    Context c(diamond);
    auto g = build_gamma(c.s, c.ord);
    CHECK(g.num_vertices() == 2);
    CHECK(g.vertices == indices(c.s, {"x", "y"}));
  }

  TEST_CASE("the checkers detect corrupted structures") {
    Context c(make_b2());
    auto g = build_gamma(c.s, c.ord);

    // drop an edge: the six-way equivalence and the case prediction break
    auto broken = g;
    broken.graph.adj[0][1] = broken.graph.adj[1][0] = 0;
    broken.diameter = diameter(broken.graph);
    broken.girth = girth(broken.graph);
    CHECK(!check_adjacency_equivalences(c.s, c.ord, broken).pass);
    bool some_failed = false;
    for (auto const& r : check_diameter_classification(c.s, c.ord, broken)) {
      some_failed = some_failed || !r.pass;
    }
    CHECK(some_failed);

    // add a self-contradictory girth value
    auto lied = g;
    lied.girth = MetricValue::finite(4);
    bool girth_failed = false;
    for (auto const& r : check_girth_classification(lied)) {
      girth_failed = girth_failed || !r.pass;
    }
    CHECK(girth_failed);
  }

  TEST_CASE("DOT rendering is deterministic and labelled by name") {
    Context c(make_b2());
    auto g = build_gamma(c.s, c.ord);
    auto dot = gamma_to_dot(c.s, g);
    CHECK(dot == gamma_to_dot(c.s, g));
    CHECK(dot.find("\"e\" -- \"f\"") != std::string::npos);
    CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
  }
}
