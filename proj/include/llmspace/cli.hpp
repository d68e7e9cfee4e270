#pragma once

#include <ostream>

namespace llmspace {

/// Full command-line surface. Exit codes: 0 success, 1 usage or configuration
/// error, 2 infeasible power budget under --strict-power, 3 validation
/// tolerance breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace llmspace
