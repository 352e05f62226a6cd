#include "zdg/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zdg {

FiniteSemigroup make_b2() {
  std::vector<std::string> elements{"0", "e", "f", "a", "b"};
  // indices            0  e  f  a  b
  std::vector<std::vector<int>> table{{0, 0, 0, 0, 0},
                                      {0, 1, 0, 3, 0},
                                      {0, 0, 2, 0, 4},
                                      {0, 0, 3, 0, 1},
                                      {0, 4, 0, 2, 0}};
  return make_semigroup(std::move(elements), std::move(table), 0);
}

FiniteSemigroup make_cyclic_group(int n) {
  if (n < 1) {
    throw std::invalid_argument("make_cyclic_group: order must be positive");
  }
  std::vector<std::string> elements;
  elements.push_back("1");
  for (int k = 1; k < n; ++k) {
    elements.push_back("g" + std::to_string(k));
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return make_semigroup(std::move(elements), std::move(table));
}

namespace {

std::array<int, 3> compose_perm(std::array<int, 3> const& f,
                                std::array<int, 3> const& g) {
  // left to right: x -> g(f(x))
  return {g[f[0] - 1], g[f[1] - 1], g[f[2] - 1]};
}

}  // namespace

FiniteSemigroup make_s3() {
  std::vector<std::string> names{"id", "(12)", "(13)", "(23)", "(123)",
                                 "(132)"};
  std::vector<std::array<int, 3>> perms{{1, 2, 3}, {2, 1, 3}, {3, 2, 1},
                                        {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
  auto index_of = [&](std::array<int, 3> const& p) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i] == p) {
        return i;
      }
    }
    throw std::logic_error("make_s3: composition left the permutation list");
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      table[i][j] = index_of(compose_perm(perms[i], perms[j]));
    }
  }
  return make_semigroup(std::move(names), std::move(table));
}

namespace {

// Partial injection on {1..n} as an image vector, 0 = undefined.
using PartialMap = std::vector<int>;

int rank_of(PartialMap const& m) {
  return static_cast<int>(std::count_if(m.begin(), m.end(),
                                        [](int v) { return v != 0; }));
}

std::string render_map(PartialMap const& m) {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!first) {
      out += ',';
    }
    out += std::to_string(i + 1) + ">" + std::to_string(m[i]);
    first = false;
  }
  out += ']';
  return out;
}

PartialMap compose_maps(PartialMap const& f, PartialMap const& g) {
  // left to right: defined where g is defined on f's image
  PartialMap out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0 && g[f[i] - 1] != 0) {
      out[i] = g[f[i] - 1];
    }
  }
  return out;
}

void enumerate_maps(int n, int pos, PartialMap& cur,
                    std::vector<bool>& used, std::vector<PartialMap>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  cur[pos] = 0;
  enumerate_maps(n, pos + 1, cur, used, out);
  for (int img = 1; img <= n; ++img) {
    if (!used[img]) {
      used[img] = true;
      cur[pos] = img;
      enumerate_maps(n, pos + 1, cur, used, out);
      cur[pos] = 0;
      used[img] = false;
    }
  }
}

}  // namespace

FiniteSemigroup make_symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument(
        "make_symmetric_inverse_monoid: supported sizes are 1..3");
  }
  std::vector<PartialMap> maps;
  PartialMap cur(n, 0);
  std::vector<bool> used(n + 1, false);
  enumerate_maps(n, 0, cur, used, maps);
  std::sort(maps.begin(), maps.end(),
            [](PartialMap const& a, PartialMap const& b) {
              int const ra = rank_of(a);
              int const rb = rank_of(b);
              if (ra != rb) {
                return ra < rb;
              }
              return a < b;
            });
  auto index_of = [&](PartialMap const& m) {
    auto it = std::find(maps.begin(), maps.end(), m);
    return static_cast<int>(it - maps.begin());
  };
  int const order = static_cast<int>(maps.size());
  std::vector<std::string> names;
  names.reserve(order);
  for (auto const& m : maps) {
    names.push_back(render_map(m));
  }
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      table[i][j] = index_of(compose_maps(maps[i], maps[j]));
    }
  }
  return make_semigroup(std::move(names), std::move(table), 0);
}

FiniteSemigroup make_clifford_chain(std::vector<int> const& orders,
                                    std::vector<int> const& hom_params) {
  int const levels = static_cast<int>(orders.size());
  if (levels < 1) {
    throw std::invalid_argument("make_clifford_chain: no levels");
  }
  std::vector<int> homs = hom_params;
  homs.resize(levels > 0 ? levels - 1 : 0, 0);
  for (int i = 0; i < levels; ++i) {
    if (orders[i] < 1) {
      throw std::invalid_argument("make_clifford_chain: bad group order");
    }
  }
  for (int i = 0; i + 1 < levels; ++i) {
    if (homs[i] < 0 || homs[i] >= orders[i + 1]
        || (static_cast<long>(orders[i]) * homs[i]) % orders[i + 1] != 0) {
      throw std::invalid_argument(
          "make_clifford_chain: parameter " + std::to_string(homs[i])
          + " does not define a homomorphism between levels "
          + std::to_string(i + 1) + " and " + std::to_string(i + 2));
    }
  }
  // map x at level i down to level k >= i through the chain
  auto push_down = [&](int x, int i, int k) {
    for (int l = i; l < k; ++l) {
      x = static_cast<int>((static_cast<long>(x) * homs[l]) % orders[l + 1]);
    }
    return x;
  };
  std::vector<std::pair<int, int>> elems;  // (level, group element)
  std::vector<std::string> names;
  for (int i = 0; i < levels; ++i) {
    for (int x = 0; x < orders[i]; ++x) {
      elems.emplace_back(i, x);
      names.push_back("g" + std::to_string(i + 1) + "_" + std::to_string(x));
    }
  }
  auto index_of = [&](int level, int x) {
    for (std::size_t t = 0; t < elems.size(); ++t) {
      if (elems[t] == std::make_pair(level, x)) {
        return static_cast<int>(t);
      }
    }
    throw std::logic_error("make_clifford_chain: lookup failure");
  };
  int const n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto const [ia, xa] = elems[a];
      auto const [ib, xb] = elems[b];
      int const k = std::max(ia, ib);
      int const prod = (push_down(xa, ia, k) + push_down(xb, ib, k))
                       % orders[k];
      table[a][b] = index_of(k, prod);
    }
  }
  return make_semigroup(std::move(names), std::move(table));
}

DirectedGraph make_digraph_g1() {
  return make_digraph({"u1", "u2"}, {});
}

DirectedGraph make_digraph_g2() {
  return make_digraph({"v1", "v2", "v3"}, {});
}

DirectedGraph make_digraph_g3() {
  return make_digraph({"w1", "w2"}, {{"e", 0, 1}});
}

DirectedGraph random_digraph(std::mt19937_64& rng,
                             RandomDigraphParams const& params) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int const nv = 1 + static_cast<int>(rng() % params.max_vertices);
    int ne = static_cast<int>(rng() % (params.max_edges + 1));
    if (nv == 1 && ne == 0) {
      ne = 1;  // keep the graph non-trivial
    }
    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i) {
      vertices.push_back("v" + std::to_string(i + 1));
    }
    std::vector<DirectedGraph::Edge> edges;
    for (int i = 0; i < ne; ++i) {
      int const src = static_cast<int>(rng() % nv);
      int const dst = static_cast<int>(rng() % nv);
      edges.push_back({"e" + std::to_string(i + 1), src, dst});
    }
    auto g = make_digraph(std::move(vertices), std::move(edges));
    auto const count = ig_elements(g, params.lmax).elements.size();
    if (static_cast<int>(count) <= params.max_elements) {
      return g;
    }
  }
  // dense samples kept overflowing the element cap; fall back to a small
  // null graph, which is always within bounds
  return make_digraph({"v1", "v2"}, {});
}

FiniteSemigroup sub_semigroup(FiniteSemigroup const& parent,
                              std::vector<int> const& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int const m = static_cast<int>(sorted.size());
  std::vector<int> position(parent.order(), -1);
  for (int i = 0; i < m; ++i) {
    position[sorted[i]] = i;
  }
  std::vector<std::string> names;
  for (int i : sorted) {
    names.push_back(parent.elements[i]);
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int const prod = parent.table[sorted[i]][sorted[j]];
      if (position[prod] < 0) {
        throw std::invalid_argument(
            "sub_semigroup: subset is not closed under products");
      }
      table[i][j] = position[prod];
    }
  }
  return make_semigroup(std::move(names), std::move(table));
}

FiniteSemigroup random_inverse_subsemigroup(std::mt19937_64& rng, int n) {
  auto const parent = make_symmetric_inverse_monoid(n);
  auto const verdict = verify_inverse(parent);
  int const order = parent.order();

  for (;;) {
    std::vector<char> in(order, 0);
    in[*parent.zero] = 1;
    int const picks = static_cast<int>(rng() % 6) + 1;
    for (int i = 0; i < picks; ++i) {
      in[rng() % order] = 1;
    }
    // close under products and inverses
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < order; ++a) {
        if (!in[a]) {
          continue;
        }
        if (!in[verdict.inverse_map[a]]) {
          in[verdict.inverse_map[a]] = 1;
          changed = true;
        }
        for (int b = 0; b < order; ++b) {
          if (in[b] && !in[parent.table[a][b]]) {
            in[parent.table[a][b]] = 1;
            changed = true;
          }
        }
      }
    }
    std::vector<int> subset;
    for (int a = 0; a < order; ++a) {
      if (in[a]) {
        subset.push_back(a);
      }
    }
    if (subset.size() >= 2) {
      return sub_semigroup(parent, subset);
    }
  }
}

std::vector<FiniteSemigroup> all_small_zero_free_clifford_chains() {
  std::vector<FiniteSemigroup> out;
  auto homs_between = [](int from, int to) {
    std::vector<int> ts;
    for (int t = 0; t < to; ++t) {
      if ((from * t) % to == 0) {
        ts.push_back(t);
      }
    }
    return ts;
  };
  for (int bottom = 2; bottom <= 3; ++bottom) {
    out.push_back(make_clifford_chain({bottom}));
  }
  for (int top = 1; top <= 3; ++top) {
    for (int bottom = 2; bottom <= 3; ++bottom) {
      for (int t : homs_between(top, bottom)) {
        out.push_back(make_clifford_chain({top, bottom}, {t}));
      }
    }
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 2; c <= 3; ++c) {
        for (int t1 : homs_between(a, b)) {
          for (int t2 : homs_between(b, c)) {
            out.push_back(make_clifford_chain({a, b, c}, {t1, t2}));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace zdg
