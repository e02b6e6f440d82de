#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace detcount {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct CliConfig {
    std::string subcommand;
    std::string ring;
    unsigned n = 0;
    std::string det;
    std::string matrix;
    std::uint64_t m = 0;
    std::string mode = "exhaustive";
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::optional<std::uint64_t> budget;
    unsigned threads = 0;
};

// Runs the command line `args` (program name excluded). Data goes to `out`,
// diagnostics to `err`. DETCOUNT_BUDGET, when set, overrides the default
// enumeration budget; --budget overrides both.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace detcount
