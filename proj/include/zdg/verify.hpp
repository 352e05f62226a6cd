// The corpus verifier: deterministic seeded families of inverse
// semigroups and digraphs, each instance run through every structural
// check that applies, tallied per check name.

#ifndef ZDG_VERIFY_HPP_
#define ZDG_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "zdg/generators.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

enum class CorpusFamily {
  i2_closures,      // random inverse subsemigroups of the monoid on 2 points
  i3_closures,      // same on 3 points
  groups,           // cyclic groups up to order 6 and the symmetric group S3
  clifford,         // zero-free Clifford chains, up to 3 levels, groups <= 3
  random_digraphs,  // seeded digraphs, <= 5 vertices, <= 6 edges
};

// nullopt on an unknown name
std::optional<CorpusFamily> parse_family(std::string const& name);
std::string family_name(CorpusFamily f);

struct CorpusSpec {
  CorpusFamily family = CorpusFamily::i2_closures;
  std::uint64_t seed = 1;
  int count = 100;   // ignored by the fixed families (groups, clifford)
  int lmax = 3;      // digraph truncation bound
  int max_elements = 250;  // digraph enumeration size cap
};

struct CheckTally {
  long instances = 0;
  long failures = 0;
  std::string first_witness;
};

struct VerifySummary {
  std::map<std::string, CheckTally> tallies;  // by check name
  long instances = 0;

  bool all_pass() const;
  void record(CheckResult const& r);
  nlohmann::json to_json() const;
  std::string table() const;  // aligned console rendering
};

// Every check that applies to one semigroup instance: axioms, order
// structure, zero-divisor graph classifications when a zero is present,
// congruence structure when zero-free.
void verify_semigroup_instance(FiniteSemigroup const& s,
                               VerifySummary& summary);

// Every check that applies to one digraph instance at the given bound.
void verify_digraph_instance(DirectedGraph const& g, int lmax,
                             VerifySummary& summary);

VerifySummary run_verify(CorpusSpec const& spec);

}  // namespace zdg

#endif  // ZDG_VERIFY_HPP_
