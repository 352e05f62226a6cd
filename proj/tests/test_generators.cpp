#include <doctest.h>

#include <set>

#include "zdg/generators.hpp"
#include "zdg/sigma.hpp"

using namespace zdg;

TEST_SUITE("generators") {
  TEST_CASE("the Brandt fixture matches its defining relations") {
    auto s = make_b2();
    CHECK(!associativity_violation(s).has_value());
    int const a = s.index_of("a");
    int const b = s.index_of("b");
    CHECK(s.table[a][a] == *s.zero);
    CHECK(s.table[b][b] == *s.zero);
    CHECK(s.table[s.table[a][b]][a] == a);  // aba = a
    CHECK(s.table[s.table[b][a]][b] == b);  // bab = b
    CHECK(s.table[a][b] == s.index_of("e"));
    CHECK(s.table[b][a] == s.index_of("f"));
    CHECK(verify_inverse(s).is_inverse);
  }

  TEST_CASE("cyclic groups") {
    for (int n = 1; n <= 6; ++n) {
      auto s = make_cyclic_group(n);
      CHECK(s.order() == n);
      CHECK(!associativity_violation(s).has_value());
      CHECK(verify_inverse(s).is_inverse);
      CHECK(is_group(s));
      CHECK(!s.zero.has_value());
    }
    CHECK_THROWS_AS(make_cyclic_group(0), std::invalid_argument);
  }

  TEST_CASE("the symmetric group on three points") {
    auto s = make_s3();
    CHECK(s.order() == 6);
    CHECK(!associativity_violation(s).has_value());
    CHECK(verify_inverse(s).is_inverse);
    CHECK(is_group(s));
    // non-abelian: (12)(13) != (13)(12)
    int const t12 = s.index_of("(12)");
    int const t13 = s.index_of("(13)");
    CHECK(s.table[t12][t13] != s.table[t13][t12]);
  }

  TEST_CASE("symmetric inverse monoids") {
    auto i2 = make_symmetric_inverse_monoid(2);
    CHECK(i2.order() == 7);
    CHECK(i2.name(*i2.zero) == "[]");
    CHECK(!associativity_violation(i2).has_value());
    CHECK(verify_inverse(i2).is_inverse);
    CHECK(i2.index_of("[1>2,2>1]") >= 0);

    auto i3 = make_symmetric_inverse_monoid(3);
    CHECK(i3.order() == 34);
    CHECK(!associativity_violation(i3).has_value());
    CHECK(verify_inverse(i3).is_inverse);

    CHECK_THROWS_AS(make_symmetric_inverse_monoid(4), std::invalid_argument);
  }

  TEST_CASE("Clifford chains") {
    auto c1 = make_clifford_chain({1, 2});
    CHECK(c1.order() == 3);
    CHECK(!associativity_violation(c1).has_value());
    CHECK(verify_inverse(c1).is_inverse);
    CHECK(!c1.zero.has_value());  // bottom group is nontrivial

    auto with_zero = make_clifford_chain({2, 1});
    CHECK(with_zero.zero.has_value());  // trivial bottom group absorbs

    CHECK_THROWS_AS(make_clifford_chain({2, 3}, {1}),
                    std::invalid_argument);  // not a homomorphism
    CHECK_THROWS_AS(make_clifford_chain({}), std::invalid_argument);

    auto family = all_small_zero_free_clifford_chains();
    CHECK(family.size() > 20);
    std::set<std::string> distinct;
    for (auto const& s : family) {
      CHECK(!associativity_violation(s).has_value());
      CHECK(verify_inverse(s).is_inverse);
      CHECK(!s.zero.has_value());
      distinct.insert(to_sgp(s));
    }
    CHECK(distinct.size() == family.size());
  }

  TEST_CASE("reference digraphs") {
    CHECK(make_digraph_g1().num_vertices() == 2);
    CHECK(make_digraph_g2().num_vertices() == 3);
    auto g3 = make_digraph_g3();
    CHECK(g3.num_edges() == 1);
    CHECK(g3.edges[0].src == g3.vertex_index("w1"));
    CHECK(g3.edges[0].dst == g3.vertex_index("w2"));
  }

  TEST_CASE("random digraphs respect their caps and seeds") {
    RandomDigraphParams params;
    std::mt19937_64 rng1(42);
    std::mt19937_64 rng2(42);
    for (int i = 0; i < 25; ++i) {
      auto a = random_digraph(rng1, params);
      auto b = random_digraph(rng2, params);
      CHECK(to_dgf(a) == to_dgf(b));
      CHECK(a.num_vertices() <= params.max_vertices);
      CHECK(a.num_edges() <= params.max_edges);
      CHECK(!a.is_trivial());
      CHECK(static_cast<int>(ig_elements(a, params.lmax).elements.size())
            <= params.max_elements);
    }
  }

  TEST_CASE("sub-semigroups must be closed") {
    auto i2 = make_symmetric_inverse_monoid(2);
    // the identity alone is closed; a rank-1 idempotent with the identity
    // is closed too
    auto idem = sub_semigroup(i2, {i2.index_of("[1>1]"), *i2.zero});
    CHECK(idem.order() == 2);
    CHECK(idem.zero.has_value());
    CHECK_THROWS_AS(
        sub_semigroup(i2, {i2.index_of("[1>2]")}),
        std::invalid_argument);  // [1>2][1>2] = [] missing
  }

  TEST_CASE("random closures are inverse semigroups with zero") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
      auto s = random_inverse_subsemigroup(rng, 3);
      CAPTURE(i);
      CHECK(s.order() >= 2);
      CHECK(s.zero.has_value());
      CHECK(!associativity_violation(s).has_value());
      auto v = verify_inverse(s);
      CHECK(v.is_inverse);
      // closed under inverses by construction
      for (int a = 0; a < s.order(); ++a) {
        CHECK(v.inverse_map[a] >= 0);
      }
    }
    // deterministic under the same seed
    std::mt19937_64 ra(9), rb(9);
    CHECK(to_sgp(random_inverse_subsemigroup(ra, 2))
          == to_sgp(random_inverse_subsemigroup(rb, 2)));
  }
}
