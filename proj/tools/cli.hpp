#pragma once

#include <iosfwd>

namespace atnlab::cli {

/// Exit codes: 0 completed, 1 usage or input error, 2 budget exceeded,
/// 3 the two oracles disagree (the instance is dumped to `err`).
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBudget = 2;
inline constexpr int kInconsistent = 3;

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace atnlab::cli
