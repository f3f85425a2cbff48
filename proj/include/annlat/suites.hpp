#ifndef ANNLAT_SUITES_HPP
#define ANNLAT_SUITES_HPP

#include "annlat/algebra.hpp"
#include "annlat/policy.hpp"

#include <string>
#include <vector>

namespace annlat {

struct SuiteResult {
  std::string suite;
  std::string anchor; // the claim label the suite verifies
  bool pass = true;
  int checks = 0;
  std::string witness;
  std::string notes; // informational findings that are not failures
};

/// Names accepted by run_suite, sorted.
std::vector<std::string> suite_names();

/// Runs one named verification suite against the algebra.
/// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const StarAlgebra& algebra,
                      const NumericPolicy& policy);

/// All suites, results sorted by suite name.
std::vector<SuiteResult> run_all_suites(const StarAlgebra& algebra,
                                        const NumericPolicy& policy);

} // namespace annlat

#endif
