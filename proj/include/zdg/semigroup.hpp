// Finite semigroups presented by Cayley tables: parsing, associativity and
// inverse-semigroup verification, the natural partial order a <= b
// (a = eb for an idempotent e), down-sets, meets, and zero handling.

#ifndef ZDG_SEMIGROUP_HPP_
#define ZDG_SEMIGROUP_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/check.hpp"

namespace zdg {

// Raised for malformed .sgp/.dgf input. line is 1-based, 0 when the error
// is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": "
                                          + msg
                                    : msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct FiniteSemigroup {
  std::vector<std::string> elements;     // canonical order = declaration order
  std::vector<std::vector<int>> table;   // table[i][j] = index of e_i * e_j
  std::optional<int> zero;
  std::vector<int> idempotents;          // ascending indices

  int order() const { return static_cast<int>(elements.size()); }
  int product(int i, int j) const { return table[i][j]; }
  std::string const& name(int i) const { return elements[i]; }

  // -1 when the name is not declared.
  int index_of(std::string_view name) const;

  bool is_idempotent(int i) const { return table[i][i] == i; }
};

inline constexpr int kDefaultMaxOrder = 512;

// Validates shape and the declared zero (must absorb), fills idempotents,
// and detects an undeclared absorbing element for orders >= 2. An order-1
// semigroup is only considered to have a zero when one is declared.
FiniteSemigroup make_semigroup(std::vector<std::string> elements,
                               std::vector<std::vector<int>> table,
                               std::optional<int> declared_zero = std::nullopt);

// .sgp format, line oriented, '#' comments:
//   elements: x1 x2 ... xn
//   zero: xk          (optional)
//   table:
//   <n rows of n element names>
FiniteSemigroup parse_semigroup(std::string_view text,
                                int max_order = kDefaultMaxOrder);

std::string to_sgp(FiniteSemigroup const& s);

// Lexicographically least triple (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k),
// or nullopt when the table is associative.
std::optional<std::array<int, 3>> associativity_violation(
    FiniteSemigroup const& s);

struct InverseVerdict {
  bool is_inverse = false;
  std::string witness;            // empty when is_inverse
  std::vector<int> inverse_map;   // filled when is_inverse
};

// A semigroup is inverse iff it is regular and its idempotents commute;
// the verdict carries the unique inverse of every element on success.
InverseVerdict verify_inverse(FiniteSemigroup const& s);

// The unique absorbing element, if any. Orders below 2 never qualify: a
// zero presupposes at least two elements.
std::optional<int> find_zero(FiniteSemigroup const& s);

struct OrderStructure {
  std::vector<std::vector<char>> leq;       // leq[a][b]: a <= b
  std::vector<std::vector<int>> down_sets;  // down_sets[a] sorted ascending

  bool less_equal(int a, int b) const { return leq[a][b] != 0; }
  std::vector<int> const& down_set(int a) const { return down_sets[a]; }
};

// Natural partial order of an inverse semigroup. Both defining forms
// (a = eb and a = bf over idempotents) are computed and must agree.
// Throws std::invalid_argument when the verdict is not inverse.
OrderStructure natural_order(FiniteSemigroup const& s,
                             InverseVerdict const& v);

// Down-set intersection: all c with c <= a and c <= b.
std::vector<int> meet_set(OrderStructure const& ord, int a, int b);

// Returns s unchanged when it already has a zero; otherwise appends a
// fresh absorbing element named "0". An existing non-absorbing element
// named "0" is a name collision and throws.
FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

// Structural checks used by the verification harness.

// Left translate set E*a computed directly from the table.
std::vector<int> idempotent_left_translates(FiniteSemigroup const& s, int a);
std::vector<int> idempotent_right_translates(FiniteSemigroup const& s, int a);

// Reflexivity, antisymmetry and transitivity of <=.
CheckResult check_partial_order_axioms(FiniteSemigroup const& s,
                                       OrderStructure const& ord);

// The two defining forms of <= produce the same relation, and the down-set
// of a equals both translate sets Ea and aE.
CheckResult check_order_forms_agree(FiniteSemigroup const& s,
                                    InverseVerdict const& v);

// An element is the unique minimum of <= iff it is absorbing (both
// directions; vacuous at order 1).
CheckResult check_zero_is_least(FiniteSemigroup const& s,
                                OrderStructure const& ord);

// inverse_map is an involution.
CheckResult check_inverse_involution(FiniteSemigroup const& s,
                                     InverseVerdict const& v);

// E(S) is closed under products and commutative.
CheckResult check_idempotents_semilattice(FiniteSemigroup const& s);

}  // namespace zdg

#endif  // ZDG_SEMIGROUP_HPP_
