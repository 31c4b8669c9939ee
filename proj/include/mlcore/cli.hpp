#pragma once

namespace mlcore::cli {

// Entry point for the mlcores tool. Exit codes: 0 success, 1 argument errors,
// 2 input/output failures, 3 refused exhaustive work (cap exceeded).
int run(int argc, const char* const* argv);

}  // namespace mlcore::cli
