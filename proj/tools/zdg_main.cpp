// Command-line front end: analyze .sgp semigroup files, analyze .dgf
// digraphs through their graph inverse semigroup, generate the built-in
// fixtures, run the seeded corpus verifier, and export DOT renderings.
//
// Exit codes: 0 ok, 1 input error, 2 axiom violation, 3 check failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zdg/report.hpp"
#include "zdg/verify.hpp"

namespace {

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw zdg::ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw zdg::ParseError("cannot write '" + path + "'");
  }
  out << content;
}

bool ends_with(std::string const& s, std::string const& suffix) {
  return s.size() >= suffix.size()
         && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int emit_report(zdg::AnalysisReport const& report,
                std::string const& json_path, std::string const& dot_path) {
  std::cout << report.human << '\n';
  if (!json_path.empty()) {
    write_file(json_path, report.json.dump(2) + "\n");
  }
  if (!dot_path.empty()) {
    if (report.dot.empty()) {
      std::cerr << "warning: no graph was built, skipping DOT output\n";
    } else {
      write_file(dot_path, report.dot);
    }
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-divisor graphs of finite inverse semigroups"};
  app.require_subcommand(1);

  std::string file;
  std::string json_path;
  std::string dot_path;
  std::string out_path;
  bool force_sigma = false;
  int max_order = zdg::kDefaultMaxOrder;
  int lmax = 4;
  int verify_lmax = 3;

  auto* analyze = app.add_subcommand(
      "analyze", "analyze a semigroup given by a .sgp file");
  analyze->add_option("file", file, "input .sgp file")->required();
  analyze->add_option("--json", json_path, "write the JSON report here");
  analyze->add_option("--dot", dot_path, "write a DOT rendering here");
  analyze->add_flag("--force-sigma", force_sigma,
                    "compute the congruence even on a semigroup with zero "
                    "(it degenerates to the universal relation)");
  analyze->add_option("--max-order", max_order,
                      "largest accepted semigroup order");

  auto* ig = app.add_subcommand(
      "ig", "analyze the graph inverse semigroup of a .dgf digraph");
  ig->add_option("file", file, "input .dgf file")->required();
  ig->add_option("--max-len", lmax, "path length bound (default 4)");
  ig->add_option("--json", json_path, "write the JSON report here");
  ig->add_option("--dot", dot_path, "write a DOT rendering here");

  auto* gen = app.add_subcommand("gen", "emit a built-in fixture");
  std::string gen_name;
  std::vector<std::string> gen_params;
  gen->add_option("name", gen_name,
                  "one of: b2, i1, i2, i3, s3, zn, clifford, g1, g2, g3")
      ->required();
  gen->add_option("params", gen_params, "generator parameters");
  gen->add_option("--out", out_path, "write here instead of stdout");

  auto* verify = app.add_subcommand(
      "verify", "run every structural check over a seeded corpus");
  std::string family_str = "i2-closures";
  std::uint64_t seed = 1;
  int count = 100;
  int max_elements = 250;
  verify->add_option("--family", family_str,
                     "i2-closures, i3-closures, groups, clifford or "
                     "random-digraphs")
      ->required();
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--count", count, "number of seeded instances");
  verify->add_option("--max-len", verify_lmax,
                     "digraph path length bound (default 3)");
  verify->add_option("--max-elements", max_elements,
                     "digraph enumeration size cap");
  verify->add_option("--json", json_path, "write the summary JSON here");

  auto* export_dot = app.add_subcommand(
      "export-dot", "emit the DOT rendering of the zero-divisor graph");
  export_dot->add_option("file", file, "input .sgp or .dgf file")->required();
  export_dot->add_option("--max-len", lmax, "path length bound for .dgf");
  export_dot->add_option("--dot", dot_path,
                         "write here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      zdg::AnalyzeOptions options;
      options.force_sigma_with_zero = force_sigma;
      options.max_order = max_order;
      auto report = zdg::analyze_semigroup_text(read_file(file), file,
                                                options);
      return emit_report(report, json_path, dot_path);
    }
    if (ig->parsed()) {
      auto report = zdg::analyze_digraph_text(read_file(file), file, lmax);
      return emit_report(report, json_path, dot_path);
    }
    if (gen->parsed()) {
      auto text = zdg::generate_named(gen_name, gen_params);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      return zdg::kExitOk;
    }
    if (verify->parsed()) {
      auto family = zdg::parse_family(family_str);
      if (!family) {
        std::cerr << "error: unknown family '" << family_str << "'\n";
        return zdg::kExitInputError;
      }
      zdg::CorpusSpec spec;
      spec.family = *family;
      spec.seed = seed;
      spec.count = count;
      spec.lmax = verify_lmax;
      spec.max_elements = max_elements;
      auto summary = zdg::run_verify(spec);
      std::cout << summary.table();
      if (!json_path.empty()) {
        write_file(json_path, summary.to_json().dump(2) + "\n");
      }
      return summary.all_pass() ? zdg::kExitOk : zdg::kExitCheckFailure;
    }
    if (export_dot->parsed()) {
      zdg::AnalysisReport report;
      if (ends_with(file, ".dgf")) {
        report = zdg::analyze_digraph_text(read_file(file), file, lmax);
      } else {
        report = zdg::analyze_semigroup_text(read_file(file), file);
      }
      if (report.exit_code == zdg::kExitInputError
          || report.exit_code == zdg::kExitAxiomViolation) {
        std::cerr << report.human << '\n';
        return report.exit_code;
      }
      if (dot_path.empty()) {
        std::cout << report.dot;
      } else {
        write_file(dot_path, report.dot);
      }
      return zdg::kExitOk;
    }
  } catch (zdg::ParseError const& err) {
    std::cerr << "error: " << err.what() << '\n';
    return zdg::kExitInputError;
  } catch (std::exception const& err) {
    std::cerr << "error: " << err.what() << '\n';
    return zdg::kExitInputError;
  }
  return zdg::kExitOk;
}
