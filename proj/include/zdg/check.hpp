// Named pass/fail results for the structural checks the analysis pipeline
// and the corpus verifier run. Failures always carry a minimal witness.

#ifndef ZDG_CHECK_HPP_
#define ZDG_CHECK_HPP_

#include <string>
#include <vector>

namespace zdg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass

  static CheckResult passed(std::string name) {
    return CheckResult{std::move(name), true, ""};
  }

  static CheckResult failed(std::string name, std::string witness) {
    return CheckResult{std::move(name), false, std::move(witness)};
  }
};

struct CheckList {
  std::vector<CheckResult> results;

  void add(CheckResult r) { results.push_back(std::move(r)); }

  void add(std::string name, bool pass, std::string witness = "") {
    results.push_back(CheckResult{std::move(name), pass,
                                  pass ? "" : std::move(witness)});
  }

  bool all_pass() const {
    for (auto const& r : results) {
      if (!r.pass) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace zdg

#endif  // ZDG_CHECK_HPP_
