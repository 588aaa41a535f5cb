#pragma once

// Exhaustive identity sweeps over finite grids of basis vectors.  Each suite
// returns a report with one entry per identity; a failed entry carries the
// first counterexample found.

#include <functional>
#include <string>
#include <vector>

namespace bfc::verify {

struct Options {
  int max_size = 8;    // largest energy / partition size swept
  int max_index = 4;   // |i|, |j|, |k|, |l| bound on operator indices
  int max_charge = 2;  // charges swept are -max_charge..max_charge
};

struct Check {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string counterexample;  // empty when passed
};

struct Report {
  std::string suite;
  std::string grid;
  std::vector<Check> checks;

  bool passed() const;
};

// The correspondence suite's report; same shape as every other suite.
using CorrespondenceReport = Report;

Report clifford(const Options& opts);
Report heisenberg_fermion(const Options& opts);
Report heisenberg_boson(const Options& opts);
Report heisenberg_geometric(const Options& opts);
Report serre(const Options& opts);
Report orthonormality(const Options& opts);
CorrespondenceReport verify_intertwining(const Options& opts);
Report commuting_square(const Options& opts);
Report c2_toy(const Options& opts);

// Suite names accepted by run(): the individual suites above plus "all".
const std::vector<std::string>& suite_names();
// Error{"unknown-suite"} for an unrecognized name.
std::vector<Report> run(const std::string& suite, const Options& opts);

}  // namespace bfc::verify
