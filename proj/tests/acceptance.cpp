// Runs the shipped suite and prints one line per acceptance criterion.
#include <iostream>
#include <map>
#include <string>

#include "homdom/suite.hpp"

#ifndef HOMDOM_CONFIG_DIR
#define HOMDOM_CONFIG_DIR "config"
#endif

using namespace homdom;

namespace {

const std::map<int, std::string> kCriteria{
    {1, "generator invariance of the quartic tubes"},
    {2, "affine homogeneity of the tube domains"},
    {3, "normalization equivalences"},
    {4, "the 13-parameter family preserves the model surfaces"},
    {5, "group structure: closure, inverses, chart rank"},
    {6, "isotropy matrices and their Lie algebra"},
    {7, "Levi signature (2,1) on the model surfaces"},
    {8, "normal form trace conditions and umbilicity"},
    {9, "sl(3) and su(2,1) subalgebra computations"},
    {10, "invariant line of the isotropy algebra"},
    {11, "affine complex lines in the non-hyperbolic domains"},
    {12, "quadric action, tube realisations, cubic tube, seven-variable family"},
    {13, "determinism across reruns and thread counts"},
};

}  // namespace

int main() {
  const std::string dir = HOMDOM_CONFIG_DIR;
  SuiteConfig full;
  SuiteConfig negative;
  try {
    full = load_config(dir + "/full_suite.cfg");
    negative = load_config(dir + "/negative_control.cfg");
  } catch (const Error& e) {
    std::cout << "config error: " << e.what() << "\n";
    return 2;
  }

  const SuiteReport serial = run_suite(full);
  std::map<int, int> checks;
  std::map<int, int> passed;
  for (const auto& r : serial.results) {
    ++checks[r.criterion];
    if (r.status == CheckStatus::pass) ++passed[r.criterion];
    else std::cout << "  " << r.id << ": " << to_string(r.status) << (r.message.empty() ? "" : " " + r.message) << "\n";
  }

  // the constraint-violating element must be rejected by the runner
  const SuiteReport neg = run_suite(negative);
  const bool negative_ok = !neg.results.empty() && neg.count(CheckStatus::fail) == neg.results.size();

  RunOptions parallel;
  parallel.jobs = 4;
  const std::string first = to_ndjson(serial, false);
  const bool deterministic = first == to_ndjson(run_suite(full), false) && first == to_ndjson(run_suite(full, parallel), false);

  bool all = true;
  for (const auto& [k, text] : kCriteria) {
    bool ok;
    std::string note;
    if (k == 13) {
      ok = deterministic;
      note = std::to_string(serial.results.size()) + " checks compared";
    } else {
      ok = checks[k] > 0 && passed[k] == checks[k];
      note = std::to_string(passed[k]) + "/" + std::to_string(checks[k]) + " checks";
      if (k == 4) {
        ok = ok && negative_ok;
        note += negative_ok ? ", negative control rejected" : ", negative control NOT rejected";
      }
    }
    all = all && ok;
    std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << text << " (" << note << ")\n";
  }
  return all ? 0 : 1;
}
