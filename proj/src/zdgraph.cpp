#include "zdg/zdgraph.hpp"

#include <algorithm>
#include <sstream>

namespace zdg {

namespace {

bool meets_trivially(FiniteSemigroup const& s, OrderStructure const& ord,
                     int a, int b) {
  auto m = meet_set(ord, a, b);
  return static_cast<int>(m.size()) == 1 && m[0] == *s.zero;
}

std::string pair_name(FiniteSemigroup const& s, int a, int b) {
  return "(" + s.name(a) + ", " + s.name(b) + ")";
}

}  // namespace

int ZdGraph::vertex_id(int a) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
  if (it == vertices.end() || *it != a) {
    return -1;
  }
  return static_cast<int>(it - vertices.begin());
}

bool ZdGraph::adjacent_elements(int a, int b) const {
  int const ia = vertex_id(a);
  int const ib = vertex_id(b);
  return ia >= 0 && ib >= 0 && graph.adjacent(ia, ib);
}

std::vector<int> zero_divisors(FiniteSemigroup const& s,
                               OrderStructure const& ord) {
  if (!s.zero) {
    throw std::invalid_argument("zero_divisors: the semigroup has no zero");
  }
  int const n = s.order();
  std::vector<int> out;
  for (int a = 0; a < n; ++a) {
    if (a == *s.zero) {
      continue;
    }
    for (int b = 0; b < n; ++b) {
      if (b == *s.zero || b == a) {
        continue;
      }
      if (meets_trivially(s, ord, a, b)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<int> annihilator(FiniteSemigroup const& s,
                             OrderStructure const& ord, int x) {
  if (!s.zero) {
    throw std::invalid_argument("annihilator: the semigroup has no zero");
  }
  std::vector<int> out;
  for (int y = 0; y < s.order(); ++y) {
    if (meets_trivially(s, ord, x, y)) {
      out.push_back(y);
    }
  }
  return out;
}

std::vector<int> minimal_nonzero(FiniteSemigroup const& s,
                                 OrderStructure const& ord) {
  if (!s.zero) {
    throw std::invalid_argument("minimal_nonzero: the semigroup has no zero");
  }
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (x == *s.zero) {
      continue;
    }
    auto const& down = ord.down_sets[x];
    if (static_cast<int>(down.size()) == 2) {
      out.push_back(x);
    }
  }
  return out;
}

ZdGraph build_gamma(FiniteSemigroup const& s, OrderStructure const& ord) {
  ZdGraph g;
  g.vertices = zero_divisors(s, ord);
  int const m = g.num_vertices();
  g.graph = SimpleGraph(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (meets_trivially(s, ord, g.vertices[i], g.vertices[j])) {
        g.graph.add_edge(i, j);
      }
    }
  }
  g.diameter = diameter(g.graph);
  g.girth = girth(g.graph);
  g.connected = is_connected(g.graph);
  return g;
}

std::string diam_case_label(DiamCase c) {
  switch (c) {
    case DiamCase::all_minimal: return "all-minimal";
    case DiamCase::overlap: return "annihilators-overlap";
    case DiamCase::disjoint_pair: return "annihilators-disjoint";
    default: return "skipped";
  }
}

std::string girth_case_label(GirthCase c) {
  switch (c) {
    case GirthCase::star: return "star";
    case GirthCase::bipartite: return "bipartite";
    case GirthCase::odd_cycle: return "odd-cycle";
    default: return "skipped";
  }
}

DiamClassification classify_diameter(FiniteSemigroup const& s,
                                     OrderStructure const& ord,
                                     ZdGraph const& g) {
  DiamClassification out;
  if (g.num_vertices() < 2) {
    return out;
  }
  auto minimal = minimal_nonzero(s, ord);
  if (g.vertices == minimal) {
    out.diam_case = DiamCase::all_minimal;
    out.predicted = MetricValue::finite(1);
    return out;
  }
  std::vector<int> beyond;  // vertices that do not cover the zero
  for (int v : g.vertices) {
    if (!std::binary_search(minimal.begin(), minimal.end(), v)) {
      beyond.push_back(v);
    }
  }
  // distinct non-adjacent pairs from beyond; annihilators must overlap in
  // a nonzero element for diameter 2, otherwise some pair forces 3
  for (std::size_t i = 0; i < beyond.size(); ++i) {
    for (std::size_t j = i + 1; j < beyond.size(); ++j) {
      int const x = beyond[i];
      int const y = beyond[j];
      if (meets_trivially(s, ord, x, y)) {
        continue;
      }
      auto ann_x = annihilator(s, ord, x);
      auto ann_y = annihilator(s, ord, y);
      std::vector<int> common;
      std::set_intersection(ann_x.begin(), ann_x.end(), ann_y.begin(),
                            ann_y.end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) == 1 && common[0] == *s.zero) {
        out.diam_case = DiamCase::disjoint_pair;
        out.predicted = MetricValue::finite(3);
        out.witness = std::make_pair(x, y);
        return out;
      }
    }
  }
  out.diam_case = DiamCase::overlap;
  out.predicted = MetricValue::finite(2);
  return out;
}

GirthClassification classify_girth(ZdGraph const& g) {
  GirthClassification out;
  if (g.num_vertices() < 2) {
    return out;
  }
  if (is_star(g.graph)) {
    out.girth_case = GirthCase::star;
    out.predicted = MetricValue::infinite();
  } else if (is_bipartite(g.graph)) {
    out.girth_case = GirthCase::bipartite;
    out.predicted = MetricValue::finite(4);
  } else {
    out.girth_case = GirthCase::odd_cycle;
    out.predicted = MetricValue::finite(3);
  }
  return out;
}

CheckResult check_adjacency_equivalences(FiniteSemigroup const& s,
                                         OrderStructure const& ord,
                                         ZdGraph const& g) {
  char const* kName = "adjacency_equivalences";
  if (!s.zero) {
    return CheckResult::failed(kName, "no zero");
  }
  int const n = s.order();
  int const z = *s.zero;
  auto trivial = [&](std::vector<int> const& set) {
    return static_cast<int>(set.size()) == 1 && set[0] == z;
  };
  std::vector<std::vector<int>> ann(n);
  for (int x = 0; x < n; ++x) {
    ann[x] = annihilator(s, ord, x);
  }
  for (int a = 0; a < n; ++a) {
    if (a == z) {
      continue;
    }
    auto const ea = idempotent_left_translates(s, a);
    auto const ae = idempotent_right_translates(s, a);
    for (int b = a + 1; b < n; ++b) {
      if (b == z) {
        continue;
      }
      bool const meet_triv = meets_trivially(s, ord, a, b);
      std::vector<int> left_common, right_common;
      auto const eb = idempotent_left_translates(s, b);
      auto const be = idempotent_right_translates(s, b);
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(left_common));
      std::set_intersection(ae.begin(), ae.end(), be.begin(), be.end(),
                            std::back_inserter(right_common));
      bool const in_ann_b = std::binary_search(ann[b].begin(), ann[b].end(), a);
      bool const in_ann_a = std::binary_search(ann[a].begin(), ann[a].end(), b);
      bool const edge = g.adjacent_elements(a, b);
      if (meet_triv != trivial(left_common) || meet_triv != trivial(right_common)
          || meet_triv != in_ann_a || meet_triv != in_ann_b
          || meet_triv != edge) {
        return CheckResult::failed(kName,
                                   "equivalence breaks at "
                                       + pair_name(s, a, b));
      }
    }
  }
  return CheckResult::passed(kName);
}

CheckResult check_minimal_characterization(FiniteSemigroup const& s,
                                           OrderStructure const& ord) {
  char const* kName = "minimal_characterization";
  auto covering = minimal_nonzero(s, ord);
  std::vector<int> direct;
  int const z = *s.zero;
  for (int x = 0; x < s.order(); ++x) {
    if (x == z) {
      continue;
    }
    bool minimal = true;
    for (int y = 0; y < s.order() && minimal; ++y) {
      if (y != x && y != z && ord.leq[y][x]) {
        minimal = false;
      }
    }
    if (minimal) {
      direct.push_back(x);
    }
  }
  if (covering != direct) {
    return CheckResult::failed(kName,
                               "covering set and minimal set differ");
  }
  return CheckResult::passed(kName);
}

std::vector<CheckResult> check_diameter_classification(
    FiniteSemigroup const& s, OrderStructure const& ord, ZdGraph const& g) {
  std::vector<CheckResult> out;
  if (g.num_vertices() == 0) {
    return out;
  }
  out.push_back(g.connected
                    ? CheckResult::passed("gamma_connected")
                    : CheckResult::failed("gamma_connected",
                                          "gamma is disconnected"));
  if (g.num_vertices() < 2) {
    return out;
  }
  bool const in_range = g.diameter.is_finite() && g.diameter.value() >= 1
                        && g.diameter.value() <= 3;
  out.push_back(in_range
                    ? CheckResult::passed("gamma_diameter_range")
                    : CheckResult::failed("gamma_diameter_range",
                                          "diameter " + g.diameter.str()));
  auto cls = classify_diameter(s, ord, g);
  if (cls.predicted == g.diameter) {
    out.push_back(CheckResult::passed("diameter_classification"));
  } else {
    out.push_back(CheckResult::failed(
        "diameter_classification",
        "case " + diam_case_label(cls.diam_case) + " predicts "
            + cls.predicted.str() + " but computed " + g.diameter.str()));
  }
  return out;
}

std::vector<CheckResult> check_girth_classification(ZdGraph const& g) {
  std::vector<CheckResult> out;
  if (g.num_vertices() == 0) {
    return out;
  }
  bool const in_range = g.girth.is_infinite()
                        || (g.girth.is_finite()
                            && (g.girth.value() == 3 || g.girth.value() == 4));
  out.push_back(in_range
                    ? CheckResult::passed("gamma_girth_range")
                    : CheckResult::failed("gamma_girth_range",
                                          "girth " + g.girth.str()));
  if (g.num_vertices() < 2) {
    return out;
  }
  auto cls = classify_girth(g);
  if (cls.predicted == g.girth) {
    out.push_back(CheckResult::passed("girth_classification"));
  } else {
    out.push_back(CheckResult::failed(
        "girth_classification",
        "case " + girth_case_label(cls.girth_case) + " predicts "
            + cls.predicted.str() + " but computed " + g.girth.str()));
  }
  return out;
}

std::string gamma_to_dot(FiniteSemigroup const& s, ZdGraph const& g) {
  std::ostringstream out;
  out << "graph gamma {\n";
  for (int v : g.vertices) {
    out << "  \"" << s.name(v) << "\";\n";
  }
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int j = i + 1; j < g.num_vertices(); ++j) {
      if (g.graph.adjacent(i, j)) {
        out << "  \"" << s.name(g.vertices[i]) << "\" -- \""
            << s.name(g.vertices[j]) << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace zdg
