#pragma once

#include <ostream>

namespace catcoh::cli {

/// Exit codes: 0 success, 1 theorem check failed, 2 input error, 3 simplex cap exceeded.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace catcoh::cli
