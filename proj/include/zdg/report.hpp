// Analysis pipelines behind the command-line front end: parse an input,
// run the axiom checks, build the zero-divisor graph, classify, and emit
// a deterministic JSON report plus optional DOT output.

#ifndef ZDG_REPORT_HPP_
#define ZDG_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zdg/check.hpp"
#include "zdg/graph_inverse.hpp"
#include "zdg/semigroup.hpp"
#include "zdg/sigma.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

inline constexpr char const* kSchemaVersion = "zdg/1";

// exit codes of the command-line tool
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitAxiomViolation = 2;
inline constexpr int kExitCheckFailure = 3;

struct AnalysisReport {
  nlohmann::json json;
  std::string human;        // short console summary
  std::string dot;          // empty unless a graph was built
  int exit_code = kExitOk;

  bool ok() const { return exit_code == kExitOk; }
};

struct AnalyzeOptions {
  bool force_sigma_with_zero = false;  // demonstrate the degenerate relation
  int max_order = kDefaultMaxOrder;
};

// Semigroup pipeline: parse, associativity, inverse verdict, natural
// order, zero-divisor graph (of the input when it has a zero, of the
// zero-adjoined extension otherwise, together with the congruence
// analysis).
AnalysisReport analyze_semigroup_text(std::string_view text,
                                      std::string_view input_name,
                                      AnalyzeOptions const& options = {});

// Digraph pipeline: parse, enumerate to the length bound, build the
// zero-divisor graph, compare the count prediction with the metrics.
AnalysisReport analyze_digraph_text(std::string_view text,
                                    std::string_view input_name, int lmax);

// gen subcommand dispatch; returns file contents. Knows: b2, i2, i3, s3,
// zn <n>, clifford <orders> [<homs>], g1, g2, g3. Throws ParseError for
// unknown names or bad parameters.
std::string generate_named(std::string const& name,
                           std::vector<std::string> const& params);

nlohmann::json metric_to_json(MetricValue const& m);
nlohmann::json checks_to_json(std::vector<CheckResult> const& checks);

}  // namespace zdg

#endif  // ZDG_REPORT_HPP_
