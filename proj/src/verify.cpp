#include "zdg/verify.hpp"

#include <iomanip>
#include <sstream>

#include "zdg/sigma.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

std::optional<CorpusFamily> parse_family(std::string const& name) {
  if (name == "i2-closures") {
    return CorpusFamily::i2_closures;
  }
  if (name == "i3-closures") {
    return CorpusFamily::i3_closures;
  }
  if (name == "groups") {
    return CorpusFamily::groups;
  }
  if (name == "clifford") {
    return CorpusFamily::clifford;
  }
  if (name == "random-digraphs") {
    return CorpusFamily::random_digraphs;
  }
  return std::nullopt;
}

std::string family_name(CorpusFamily f) {
  switch (f) {
    case CorpusFamily::i2_closures: return "i2-closures";
    case CorpusFamily::i3_closures: return "i3-closures";
    case CorpusFamily::groups: return "groups";
    case CorpusFamily::clifford: return "clifford";
    default: return "random-digraphs";
  }
}

bool VerifySummary::all_pass() const {
  for (auto const& [name, tally] : tallies) {
    if (tally.failures > 0) {
      return false;
    }
  }
  return true;
}

void VerifySummary::record(CheckResult const& r) {
  auto& tally = tallies[r.name];
  tally.instances += 1;
  if (!r.pass) {
    tally.failures += 1;
    if (tally.first_witness.empty()) {
      tally.first_witness = r.witness;
    }
  }
}

nlohmann::json VerifySummary::to_json() const {
  nlohmann::json checks = nlohmann::json::object();
  for (auto const& [name, tally] : tallies) {
    nlohmann::json j = {{"instances", tally.instances},
                        {"failures", tally.failures}};
    if (!tally.first_witness.empty()) {
      j["first_witness"] = tally.first_witness;
    }
    checks[name] = std::move(j);
  }
  return nlohmann::json{{"schema", "zdg/1"},
                        {"instances", instances},
                        {"all_pass", all_pass()},
                        {"checks", std::move(checks)}};
}

std::string VerifySummary::table() const {
  std::size_t width = 4;
  for (auto const& [name, tally] : tallies) {
    width = std::max(width, name.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "name"
      << "  instances  failures\n";
  for (auto const& [name, tally] : tallies) {
    out << std::left << std::setw(static_cast<int>(width)) << name << "  "
        << std::right << std::setw(9) << tally.instances << "  "
        << std::setw(8) << tally.failures;
    if (!tally.first_witness.empty()) {
      out << "  " << tally.first_witness;
    }
    out << '\n';
  }
  out << instances << " instances, "
      << (all_pass() ? "all checks passed" : "CHECK FAILURES") << '\n';
  return out.str();
}

void verify_semigroup_instance(FiniteSemigroup const& s,
                               VerifySummary& summary) {
  summary.instances += 1;

  auto const triple = associativity_violation(s);
  summary.record(triple
                     ? CheckResult::failed("associativity",
                                           "violating triple found")
                     : CheckResult::passed("associativity"));
  if (triple) {
    return;
  }
  auto const verdict = verify_inverse(s);
  summary.record(verdict.is_inverse
                     ? CheckResult::passed("inverse_semigroup")
                     : CheckResult::failed("inverse_semigroup",
                                           verdict.witness));
  if (!verdict.is_inverse) {
    return;
  }

  auto const ord = natural_order(s, verdict);
  summary.record(check_partial_order_axioms(s, ord));
  summary.record(check_order_forms_agree(s, verdict));
  summary.record(check_zero_is_least(s, ord));
  summary.record(check_inverse_involution(s, verdict));
  summary.record(check_idempotents_semilattice(s));

  if (s.zero) {
    auto const gamma = build_gamma(s, ord);
    summary.record(check_adjacency_equivalences(s, ord, gamma));
    summary.record(check_minimal_characterization(s, ord));
    for (auto const& r : check_diameter_classification(s, ord, gamma)) {
      summary.record(r);
    }
    for (auto const& r : check_girth_classification(gamma)) {
      summary.record(r);
    }
  } else {
    auto const sp = sigma(s, verdict);
    summary.record(check_sigma_group_congruence(s, sp));
    if (auto least = check_sigma_least(s, sp)) {
      summary.record(*least);
    }
    summary.record(check_sigma_adjacency(s, sp));
    CheckList structure;
    verify_structure_theorem(s, sp, structure);
    for (auto const& r : structure.results) {
      summary.record(r);
    }
    for (auto const& r : check_sigma_metric_predictions(s, sp)) {
      summary.record(r);
    }
  }
}

void verify_digraph_instance(DirectedGraph const& g, int lmax,
                             VerifySummary& summary) {
  summary.instances += 1;
  auto const gamma = build_gamma_ig(g, lmax);
  summary.record(check_ig_adjacency_oracle(g, gamma.enumeration));
  summary.record(check_ig_paths_complete(gamma));
  summary.record(check_ig_all_vertices(g, gamma));
  summary.record(check_ig_associativity(gamma.enumeration));
  summary.record(check_ig_inverse_laws(gamma.enumeration));
  for (auto const& r : check_ig_metric_theorems(g, gamma)) {
    summary.record(r);
  }
}

VerifySummary run_verify(CorpusSpec const& spec) {
  VerifySummary summary;
  switch (spec.family) {
    case CorpusFamily::groups: {
      for (int n = 1; n <= 6; ++n) {
        verify_semigroup_instance(make_cyclic_group(n), summary);
      }
      verify_semigroup_instance(make_s3(), summary);
      break;
    }
    case CorpusFamily::clifford: {
      for (auto const& s : all_small_zero_free_clifford_chains()) {
        verify_semigroup_instance(s, summary);
      }
      break;
    }
    case CorpusFamily::i2_closures:
    case CorpusFamily::i3_closures: {
      int const n = spec.family == CorpusFamily::i2_closures ? 2 : 3;
      for (int i = 0; i < spec.count; ++i) {
        std::mt19937_64 rng(spec.seed * 0x9E3779B97F4A7C15ULL
                            + static_cast<std::uint64_t>(i) + 1);
        verify_semigroup_instance(random_inverse_subsemigroup(rng, n),
                                  summary);
      }
      break;
    }
    case CorpusFamily::random_digraphs: {
      RandomDigraphParams params;
      params.lmax = spec.lmax;
      params.max_elements = spec.max_elements;
      for (int i = 0; i < spec.count; ++i) {
        std::mt19937_64 rng(spec.seed * 0x9E3779B97F4A7C15ULL
                            + static_cast<std::uint64_t>(i) + 1);
        verify_digraph_instance(random_digraph(rng, params), spec.lmax,
                                summary);
      }
      break;
    }
  }
  return summary;
}

}  // namespace zdg
