#pragma once

#include <ostream>

namespace lacunary {

/// Exit codes: 0 all selected checks pass, 1 any failure, 2 usage or config error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lacunary
