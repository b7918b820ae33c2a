#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace dwlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;     // the answer is "no" / "none"
inline constexpr int kExitError = 2;  // bad input, bad flags, cap exceeded

/// Frozen bench CSV header.
inline constexpr const char* kBenchHeader = "n,seed,dw_exact,approx,ratio,ctw,fas,t_exact_ms,t_approx_ms,t_fas_ms";

/// Runs one subcommand; `args` excludes the program name. Reports go to `out`
/// as one JSON object per line (CSV for bench), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dwlab::cli
