#pragma once

#include <iosfwd>

namespace lieconf {

/// Entry point of the lie-conformal tool. Exit codes: 0 success or match,
/// 1 classification or check mismatch, 2 usage or input error.
int run(int argc, char** argv);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace lieconf
