#pragma once

namespace ccs::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage error.
int run(int argc, char** argv);

}  // namespace ccs::cli
