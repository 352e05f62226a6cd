#include "zdg/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace zdg {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    out.push_back(cur);
  }
  return out;
}

std::string strip_comment(std::string_view line) {
  auto pos = line.find('#');
  if (pos != std::string_view::npos) {
    line = line.substr(0, pos);
  }
  return std::string(line);
}

}  // namespace

int FiniteSemigroup::index_of(std::string_view name) const {
  for (int i = 0; i < order(); ++i) {
    if (elements[i] == name) {
      return i;
    }
  }
  return -1;
}

FiniteSemigroup make_semigroup(std::vector<std::string> elements,
                               std::vector<std::vector<int>> table,
                               std::optional<int> declared_zero) {
  int const n = static_cast<int>(elements.size());
  if (n == 0) {
    throw ParseError("a semigroup needs at least one element");
  }
  {
    std::unordered_set<std::string> seen;
    for (auto const& e : elements) {
      if (!seen.insert(e).second) {
        throw ParseError("duplicate element name '" + e + "'");
      }
    }
  }
  if (static_cast<int>(table.size()) != n) {
    throw ParseError("table has " + std::to_string(table.size())
                     + " rows, expected " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw ParseError("table row " + std::to_string(i) + " has "
                       + std::to_string(table[i].size()) + " entries, expected "
                       + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        throw ParseError("table entry out of range at ("
                         + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }

  FiniteSemigroup s;
  s.elements = std::move(elements);
  s.table = std::move(table);

  if (declared_zero) {
    int z = *declared_zero;
    if (z < 0 || z >= n) {
      throw ParseError("declared zero index out of range");
    }
    for (int i = 0; i < n; ++i) {
      if (s.table[z][i] != z || s.table[i][z] != z) {
        throw ParseError("declared zero '" + s.elements[z]
                         + "' is not absorbing");
      }
    }
    s.zero = z;
  }

  for (int i = 0; i < n; ++i) {
    if (s.table[i][i] == i) {
      s.idempotents.push_back(i);
    }
  }

  if (!s.zero) {
    s.zero = find_zero(s);
  }
  return s;
}

FiniteSemigroup parse_semigroup(std::string_view text, int max_order) {
  std::vector<std::string> elements;
  std::optional<std::string> zero_name;
  std::vector<std::vector<std::string>> rows;
  int elements_line = 0;
  int zero_line = 0;
  bool in_table = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::vector<int> row_lines;
  while (std::getline(in, raw)) {
    ++lineno;
    auto tokens = split_tokens(strip_comment(raw));
    if (tokens.empty()) {
      continue;
    }
    if (!in_table && tokens[0] == "elements:") {
      if (!elements.empty()) {
        throw ParseError("repeated 'elements:' directive", lineno);
      }
      elements.assign(tokens.begin() + 1, tokens.end());
      if (elements.empty()) {
        throw ParseError("'elements:' declares no elements", lineno);
      }
      elements_line = lineno;
    } else if (!in_table && tokens[0] == "zero:") {
      if (tokens.size() != 2) {
        throw ParseError("'zero:' expects exactly one element name", lineno);
      }
      if (zero_name) {
        throw ParseError("repeated 'zero:' directive", lineno);
      }
      zero_name = tokens[1];
      zero_line = lineno;
    } else if (!in_table && tokens[0] == "table:") {
      if (tokens.size() != 1) {
        throw ParseError("'table:' takes no arguments", lineno);
      }
      if (elements.empty()) {
        throw ParseError("'table:' before 'elements:'", lineno);
      }
      in_table = true;
    } else if (in_table) {
      if (rows.size() == elements.size()) {
        throw ParseError("unexpected content after the last table row",
                         lineno);
      }
      rows.push_back(tokens);
      row_lines.push_back(lineno);
    } else {
      throw ParseError("expected 'elements:', 'zero:' or 'table:'", lineno);
    }
  }

  if (elements.empty()) {
    throw ParseError("missing 'elements:' directive");
  }
  if (static_cast<int>(elements.size()) > max_order) {
    throw ParseError("semigroup order " + std::to_string(elements.size())
                         + " exceeds the supported maximum "
                         + std::to_string(max_order),
                     elements_line);
  }
  if (!in_table) {
    throw ParseError("missing 'table:' directive");
  }
  int const n = static_cast<int>(elements.size());
  if (static_cast<int>(rows.size()) != n) {
    throw ParseError("table has " + std::to_string(rows.size())
                     + " rows, expected " + std::to_string(n));
  }

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw ParseError("duplicate element name '" + elements[i] + "'",
                       elements_line);
    }
  }

  std::vector<std::vector<int>> table(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ParseError("table row " + std::to_string(i) + " has "
                           + std::to_string(rows[i].size())
                           + " entries, expected " + std::to_string(n),
                       row_lines[i]);
    }
    table[i].resize(n);
    for (int j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end()) {
        throw ParseError("unknown element name '" + rows[i][j] + "'",
                         row_lines[i]);
      }
      table[i][j] = it->second;
    }
  }

  std::optional<int> zero;
  if (zero_name) {
    auto it = index.find(*zero_name);
    if (it == index.end()) {
      throw ParseError("unknown element name '" + *zero_name + "'",
                       zero_line);
    }
    zero = it->second;
  }
  return make_semigroup(std::move(elements), std::move(table), zero);
}

std::string to_sgp(FiniteSemigroup const& s) {
  std::ostringstream out;
  out << "elements:";
  for (auto const& e : s.elements) {
    out << ' ' << e;
  }
  out << '\n';
  if (s.zero) {
    out << "zero: " << s.elements[*s.zero] << '\n';
  }
  out << "table:\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      out << (j ? " " : "") << s.elements[s.table[i][j]];
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::array<int, 3>> associativity_violation(
    FiniteSemigroup const& s) {
  int const n = s.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int const ij = s.table[i][j];
      for (int k = 0; k < n; ++k) {
        if (s.table[ij][k] != s.table[i][s.table[j][k]]) {
          return std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

InverseVerdict verify_inverse(FiniteSemigroup const& s) {
  int const n = s.order();
  InverseVerdict v;

  for (std::size_t a = 0; a < s.idempotents.size(); ++a) {
    for (std::size_t b = a + 1; b < s.idempotents.size(); ++b) {
      int e = s.idempotents[a];
      int f = s.idempotents[b];
      if (s.table[e][f] != s.table[f][e]) {
        v.is_inverse = false;
        v.witness = "idempotents " + s.name(e) + " and " + s.name(f)
                    + " do not commute";
        return v;
      }
    }
  }

  v.inverse_map.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool const quasi = s.table[s.table[a][b]][a] == a
                         && s.table[s.table[b][a]][b] == b;
      if (!quasi) {
        continue;
      }
      if (v.inverse_map[a] != -1) {
        // unreachable once idempotents commute
        v.is_inverse = false;
        v.witness = "element " + s.name(a) + " has two quasi-inverses "
                    + s.name(v.inverse_map[a]) + " and " + s.name(b);
        v.inverse_map.clear();
        return v;
      }
      v.inverse_map[a] = b;
    }
    if (v.inverse_map[a] == -1) {
      v.is_inverse = false;
      v.witness = "element " + s.name(a) + " has no quasi-inverse";
      v.inverse_map.clear();
      return v;
    }
  }
  v.is_inverse = true;
  return v;
}

std::optional<int> find_zero(FiniteSemigroup const& s) {
  int const n = s.order();
  if (n < 2) {
    return std::nullopt;
  }
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int i = 0; i < n && absorbing; ++i) {
      absorbing = s.table[z][i] == z && s.table[i][z] == z;
    }
    if (absorbing) {
      return z;
    }
  }
  return std::nullopt;
}

std::vector<int> idempotent_left_translates(FiniteSemigroup const& s, int a) {
  std::vector<int> out;
  for (int e : s.idempotents) {
    out.push_back(s.table[e][a]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> idempotent_right_translates(FiniteSemigroup const& s, int a) {
  std::vector<int> out;
  for (int f : s.idempotents) {
    out.push_back(s.table[a][f]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrderStructure natural_order(FiniteSemigroup const& s,
                             InverseVerdict const& v) {
  if (!v.is_inverse) {
    throw std::invalid_argument(
        "natural_order: the semigroup is not inverse ("
        + (v.witness.empty() ? std::string("no verdict") : v.witness) + ")");
  }
  int const n = s.order();
  OrderStructure ord;
  ord.leq.assign(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> right(n, std::vector<char>(n, 0));
  for (int b = 0; b < n; ++b) {
    for (int e : s.idempotents) {
      ord.leq[s.table[e][b]][b] = 1;
      right[s.table[b][e]][b] = 1;
    }
  }
  if (ord.leq != right) {
    throw std::logic_error(
        "natural_order: left and right order forms disagree");
  }
  ord.down_sets.assign(n, {});
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (ord.leq[a][b]) {
        ord.down_sets[b].push_back(a);
      }
    }
  }
  return ord;
}

std::vector<int> meet_set(OrderStructure const& ord, int a, int b) {
  std::vector<int> out;
  std::set_intersection(ord.down_sets[a].begin(), ord.down_sets[a].end(),
                        ord.down_sets[b].begin(), ord.down_sets[b].end(),
                        std::back_inserter(out));
  return out;
}

FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
  if (s.zero) {
    return s;
  }
  if (s.index_of("0") >= 0) {
    throw ParseError(
        "cannot adjoin a zero: element name '0' is already taken");
  }
  int const n = s.order();
  auto elements = s.elements;
  elements.push_back("0");
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[i][j] = s.table[i][j];
    }
  }
  return make_semigroup(std::move(elements), std::move(table), n);
}

CheckResult check_partial_order_axioms(FiniteSemigroup const& s,
                                       OrderStructure const& ord) {
  int const n = s.order();
  for (int a = 0; a < n; ++a) {
    if (!ord.leq[a][a]) {
      return CheckResult::failed("natural_order_axioms",
                                 "not reflexive at " + s.name(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && ord.leq[a][b] && ord.leq[b][a]) {
        return CheckResult::failed(
            "natural_order_axioms",
            "antisymmetry fails for " + s.name(a) + ", " + s.name(b));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!ord.leq[a][b]) {
        continue;
      }
      for (int c = 0; c < n; ++c) {
        if (ord.leq[b][c] && !ord.leq[a][c]) {
          return CheckResult::failed(
              "natural_order_axioms",
              "transitivity fails for " + s.name(a) + " <= " + s.name(b)
                  + " <= " + s.name(c));
        }
      }
    }
  }
  return CheckResult::passed("natural_order_axioms");
}

CheckResult check_order_forms_agree(FiniteSemigroup const& s,
                                    InverseVerdict const& v) {
  if (!v.is_inverse) {
    return CheckResult::failed("natural_order_forms_agree", "not inverse");
  }
  auto ord = natural_order(s, v);
  for (int a = 0; a < s.order(); ++a) {
    auto left = idempotent_left_translates(s, a);
    auto right = idempotent_right_translates(s, a);
    if (left != ord.down_sets[a] || right != ord.down_sets[a]) {
      return CheckResult::failed(
          "natural_order_forms_agree",
          "translate sets of " + s.name(a) + " disagree with the down-set");
    }
  }
  return CheckResult::passed("natural_order_forms_agree");
}

CheckResult check_zero_is_least(FiniteSemigroup const& s,
                                OrderStructure const& ord) {
  int const n = s.order();
  if (n < 2) {
    return CheckResult::passed("zero_is_least");
  }
  // the unique minimum of the order, if any
  std::optional<int> least;
  for (int a = 0; a < n; ++a) {
    bool below_all = true;
    for (int b = 0; b < n && below_all; ++b) {
      below_all = ord.leq[a][b] != 0;
    }
    if (below_all) {
      least = a;
      break;
    }
  }
  auto zero = find_zero(s);
  if (zero.has_value() != least.has_value()
      || (zero && least && *zero != *least)) {
    auto show = [&](std::optional<int> x) {
      return x ? s.name(*x) : std::string("none");
    };
    return CheckResult::failed("zero_is_least",
                               "least element " + show(least)
                                   + " vs absorbing element " + show(zero));
  }
  return CheckResult::passed("zero_is_least");
}

CheckResult check_inverse_involution(FiniteSemigroup const& s,
                                     InverseVerdict const& v) {
  if (!v.is_inverse) {
    return CheckResult::failed("inverse_involution", "not inverse");
  }
  for (int a = 0; a < s.order(); ++a) {
    if (v.inverse_map[v.inverse_map[a]] != a) {
      return CheckResult::failed("inverse_involution",
                                 "fails at " + s.name(a));
    }
  }
  return CheckResult::passed("inverse_involution");
}

CheckResult check_idempotents_semilattice(FiniteSemigroup const& s) {
  for (int e : s.idempotents) {
    for (int f : s.idempotents) {
      int const ef = s.table[e][f];
      if (ef != s.table[f][e]) {
        return CheckResult::failed("idempotents_semilattice",
                                   s.name(e) + " and " + s.name(f)
                                       + " do not commute");
      }
      if (s.table[ef][ef] != ef) {
        return CheckResult::failed("idempotents_semilattice",
                                   "product of " + s.name(e) + " and "
                                       + s.name(f) + " is not idempotent");
      }
    }
  }
  return CheckResult::passed("idempotents_semilattice");
}

}  // namespace zdg
