#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ppc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default sieve cache file.
inline constexpr const char* kSieveCacheEnv = "PPC_SIEVE_CACHE";

/// Runs one command line (without the program name). Reports go to `out`
/// (or the --output file), diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppc::cli
