#include "zdg/report.hpp"

#include <sstream>

#include "zdg/generators.hpp"

namespace zdg {

namespace {

nlohmann::json input_error_json(std::string_view input_name,
                                std::string const& kind,
                                std::string const& message) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["input"] = std::string(input_name);
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

void append_checks(std::vector<CheckResult>& into,
                   std::vector<CheckResult> more) {
  for (auto& r : more) {
    into.push_back(std::move(r));
  }
}

}  // namespace

nlohmann::json metric_to_json(MetricValue const& m) {
  if (m.is_finite()) {
    return m.value();
  }
  return m.str();  // "inf" or "undefined"
}

nlohmann::json checks_to_json(std::vector<CheckResult> const& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (auto const& c : checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.pass) {
      j["witness"] = c.witness;
    }
    out.push_back(std::move(j));
  }
  return out;
}

AnalysisReport analyze_semigroup_text(std::string_view text,
                                      std::string_view input_name,
                                      AnalyzeOptions const& options) {
  AnalysisReport report;

  FiniteSemigroup s;
  try {
    s = parse_semigroup(text, options.max_order);
  } catch (ParseError const& err) {
    report.exit_code = kExitInputError;
    report.json = input_error_json(input_name, "input", err.what());
    report.human = "error: " + std::string(err.what());
    return report;
  }

  report.json["schema"] = kSchemaVersion;
  report.json["input"] = std::string(input_name);

  if (auto triple = associativity_violation(s)) {
    auto const [i, j, k] = *triple;
    std::string const msg = "table is not associative at (" + s.name(i) + ", "
                            + s.name(j) + ", " + s.name(k) + ")";
    report.exit_code = kExitAxiomViolation;
    report.json["error"] = {{"kind", "axiom"}, {"message", msg}};
    report.human = "error: " + msg;
    return report;
  }

  auto const verdict = verify_inverse(s);
  if (!verdict.is_inverse) {
    std::string const msg = "not an inverse semigroup: " + verdict.witness;
    report.exit_code = kExitAxiomViolation;
    report.json["error"] = {{"kind", "axiom"}, {"message", msg}};
    report.human = "error: " + msg;
    return report;
  }

  report.json["semigroup"] = {
      {"order", s.order()},
      {"num_idempotents", static_cast<int>(s.idempotents.size())},
      {"zero", s.zero ? nlohmann::json(s.name(*s.zero)) : nlohmann::json()},
      {"is_inverse", true},
  };

  auto const ord = natural_order(s, verdict);
  std::vector<CheckResult> checks;
  checks.push_back(check_partial_order_axioms(s, ord));
  checks.push_back(check_order_forms_agree(s, verdict));
  checks.push_back(check_zero_is_least(s, ord));
  checks.push_back(check_inverse_involution(s, verdict));
  checks.push_back(check_idempotents_semilattice(s));

  // graph of the input itself when it has a zero, of the zero-adjoined
  // extension otherwise
  FiniteSemigroup const* graph_source = &s;
  OrderStructure const* graph_order = &ord;
  FiniteSemigroup s0;
  OrderStructure ord0;
  bool const zero_free = !s.zero.has_value();
  if (zero_free) {
    s0 = adjoin_zero(s);
    auto const verdict0 = verify_inverse(s0);
    ord0 = natural_order(s0, verdict0);
    graph_source = &s0;
    graph_order = &ord0;
  }
  auto const gamma = build_gamma(*graph_source, *graph_order);
  checks.push_back(check_adjacency_equivalences(*graph_source, *graph_order,
                                                gamma));
  checks.push_back(check_minimal_characterization(*graph_source,
                                                  *graph_order));
  append_checks(checks,
                check_diameter_classification(*graph_source, *graph_order,
                                              gamma));
  append_checks(checks, check_girth_classification(gamma));

  auto const diam_cls = classify_diameter(*graph_source, *graph_order, gamma);
  auto const girth_cls = classify_girth(gamma);
  nlohmann::json names = nlohmann::json::array();
  for (int v : gamma.vertices) {
    names.push_back(graph_source->name(v));
  }
  report.json["gamma"] = {
      {"graph_of", zero_free ? "zero-adjoined" : "input"},
      {"vertices", gamma.num_vertices()},
      {"vertex_names", std::move(names)},
      {"edges", gamma.graph.edge_count()},
      {"diameter", metric_to_json(gamma.diameter)},
      {"girth", metric_to_json(gamma.girth)},
      {"connected", gamma.connected},
      {"diam_case",
       diam_cls.diam_case == DiamCase::skipped
           ? nlohmann::json()
           : nlohmann::json(diam_case_label(diam_cls.diam_case))},
      {"girth_case",
       girth_cls.girth_case == GirthCase::skipped
           ? nlohmann::json()
           : nlohmann::json(girth_case_label(girth_cls.girth_case))},
  };
  report.dot = gamma_to_dot(*graph_source, gamma);

  if (zero_free || options.force_sigma_with_zero) {
    auto const sp = sigma(s, verdict, options.force_sigma_with_zero);
    nlohmann::json sizes = nlohmann::json::array();
    for (auto const& cls : sp.classes) {
      sizes.push_back(static_cast<int>(cls.size()));
    }
    nlohmann::json sigma_json = {
        {"num_classes", sp.num_classes()},
        {"class_sizes", std::move(sizes)},
        {"is_identity", sp.is_identity},
        {"degenerate", !zero_free},
    };
    if (zero_free) {
      sigma_json["predicted_diameter"]
          = metric_to_json(predict_diameter_sigma(s, sp));
      sigma_json["predicted_girth"]
          = metric_to_json(predict_girth_sigma(s, sp));
      std::vector<CheckResult> sigma_checks;
      sigma_checks.push_back(check_sigma_group_congruence(s, sp));
      if (auto least = check_sigma_least(s, sp)) {
        sigma_checks.push_back(*least);
      }
      sigma_checks.push_back(check_sigma_adjacency(s, sp));
      CheckList structure;
      verify_structure_theorem(s, sp, structure);
      append_checks(sigma_checks, structure.results);
      append_checks(sigma_checks, check_sigma_metric_predictions(s, sp));
      sigma_json["checks"] = checks_to_json(sigma_checks);
      append_checks(checks, std::move(sigma_checks));
    }
    report.json["sigma"] = std::move(sigma_json);
  }

  report.json["checks"] = checks_to_json(checks);
  bool all_pass = true;
  for (auto const& c : checks) {
    all_pass = all_pass && c.pass;
  }
  report.exit_code = all_pass ? kExitOk : kExitCheckFailure;

  std::ostringstream human;
  human << input_name << ": order " << s.order() << ", "
        << s.idempotents.size() << " idempotents, zero "
        << (s.zero ? s.name(*s.zero) : std::string("none")) << "\n";
  human << "gamma" << (zero_free ? " (zero adjoined)" : "") << ": "
        << gamma.num_vertices() << " vertices, " << gamma.graph.edge_count()
        << " edges, diameter " << gamma.diameter.str() << ", girth "
        << gamma.girth.str();
  if (diam_cls.diam_case != DiamCase::skipped) {
    human << ", cases " << diam_case_label(diam_cls.diam_case) << " / "
          << girth_case_label(girth_cls.girth_case);
  }
  human << "\nchecks: " << (all_pass ? "all passed" : "FAILURES") << " ("
        << checks.size() << " run)";
  report.human = human.str();
  return report;
}

AnalysisReport analyze_digraph_text(std::string_view text,
                                    std::string_view input_name, int lmax) {
  AnalysisReport report;

  DirectedGraph g;
  try {
    g = parse_graph(text);
  } catch (ParseError const& err) {
    report.exit_code = kExitInputError;
    report.json = input_error_json(input_name, "input", err.what());
    report.human = "error: " + std::string(err.what());
    return report;
  }
  if (g.is_trivial()) {
    std::string const msg =
        "the semigroup of a trivial graph has no zero-divisors";
    report.exit_code = kExitInputError;
    report.json = input_error_json(input_name, "input", msg);
    report.human = "error: " + msg;
    return report;
  }

  auto const gamma = build_gamma_ig(g, lmax);
  auto const prediction = classify_ig(g);

  std::vector<CheckResult> checks;
  checks.push_back(check_ig_paths_complete(gamma));
  checks.push_back(check_ig_all_vertices(g, gamma));
  checks.push_back(check_ig_inverse_laws(gamma.enumeration));
  append_checks(checks, check_ig_metric_theorems(g, gamma));

  report.json["schema"] = kSchemaVersion;
  report.json["input"] = std::string(input_name);
  report.json["graph"] = {
      {"vertices", g.num_vertices()},
      {"edges", g.num_edges()},
      {"null", g.is_null()},
      {"acyclic", g.is_acyclic()},
  };
  report.json["enumeration"] = {
      {"lmax", gamma.enumeration.lmax},
      {"exact", gamma.exact()},
      {"elements", static_cast<int>(gamma.enumeration.elements.size())},
  };
  nlohmann::json names = nlohmann::json::array();
  for (auto const& v : gamma.vertices) {
    names.push_back(render_element(g, v));
  }
  report.json["gamma"] = {
      {"vertices", gamma.num_vertices()},
      {"vertex_names", std::move(names)},
      {"edges", gamma.graph.edge_count()},
      {"diameter", metric_to_json(gamma.diameter)},
      {"girth", metric_to_json(gamma.girth)},
      {"connected", gamma.connected},
      {"truncated", !gamma.exact()},
  };
  report.json["prediction"] = {
      {"diameter", metric_to_json(prediction.diameter)},
      {"girth", metric_to_json(prediction.girth)},
  };
  report.json["checks"] = checks_to_json(checks);
  report.dot = ig_gamma_to_dot(g, gamma);

  bool all_pass = true;
  for (auto const& c : checks) {
    all_pass = all_pass && c.pass;
  }
  report.exit_code = all_pass ? kExitOk : kExitCheckFailure;

  std::ostringstream human;
  human << input_name << ": " << g.num_vertices() << " vertices, "
        << g.num_edges() << " edges, "
        << (gamma.exact() ? "exact" : "truncated") << " enumeration at lmax "
        << lmax << "\n";
  human << "gamma: " << gamma.num_vertices() << " vertices, "
        << gamma.graph.edge_count() << " edges, diameter "
        << gamma.diameter.str() << ", girth " << gamma.girth.str() << "\n";
  human << "prediction: (" << prediction.diameter.str() << ", "
        << prediction.girth.str() << "); checks: "
        << (all_pass ? "all passed" : "FAILURES");
  report.human = human.str();
  return report;
}

namespace {

std::vector<int> parse_int_list(std::string const& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) {
      throw ParseError("empty entry in list '" + text + "'");
    }
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      cur.push_back(c);
    } else {
      throw ParseError("bad character in list '" + text + "'");
    }
  }
  flush();
  return out;
}

}  // namespace

std::string generate_named(std::string const& name,
                           std::vector<std::string> const& params) {
  auto expect_params = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw ParseError("generator '" + name
                       + "' got an unexpected number of parameters");
    }
  };
  try {
    if (name == "b2") {
      expect_params(0, 0);
      return to_sgp(make_b2());
    }
    if (name == "i1" || name == "i2" || name == "i3") {
      expect_params(0, 0);
      return to_sgp(make_symmetric_inverse_monoid(name[1] - '0'));
    }
    if (name == "s3") {
      expect_params(0, 0);
      return to_sgp(make_s3());
    }
    if (name == "zn") {
      expect_params(1, 1);
      int const n = std::stoi(params[0]);
      if (n < 1 || n > 64) {
        throw ParseError("zn supports orders 1..64");
      }
      return to_sgp(make_cyclic_group(n));
    }
    if (name == "clifford") {
      expect_params(1, 2);
      auto orders = parse_int_list(params[0]);
      std::vector<int> homs;
      if (params.size() == 2) {
        homs = parse_int_list(params[1]);
      }
      return to_sgp(make_clifford_chain(orders, homs));
    }
    if (name == "g1") {
      expect_params(0, 0);
      return to_dgf(make_digraph_g1());
    }
    if (name == "g2") {
      expect_params(0, 0);
      return to_dgf(make_digraph_g2());
    }
    if (name == "g3") {
      expect_params(0, 0);
      return to_dgf(make_digraph_g3());
    }
  } catch (std::invalid_argument const& err) {
    throw ParseError(err.what());
  }
  throw ParseError("unknown generator '" + name
                   + "' (try: b2, i1, i2, i3, s3, zn, clifford, g1, g2, g3)");
}

}  // namespace zdg
