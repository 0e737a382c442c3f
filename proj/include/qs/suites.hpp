#pragma once

#include <string>
#include <vector>

#include "qs/report.hpp"

namespace qs {

// lr-oracle, bz-symmetry, gr-duality, gr-identity, flip, stratum, box,
// cayley, appendix-top, appendix-lowest, appendix-cross, sympower,
// quot-specialize.
const std::vector<std::string>& suite_names();

// Runs a suite on one instance when its parameters are all given, otherwise
// over the default grid (bounds overridable via max_* keys). Unknown suites
// and bad parameters throw std::invalid_argument. The report does not depend
// on jobs.
VerificationReport run_suite(const std::string& name, const Json& params, unsigned jobs = 1);

}  // namespace qs
