#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace holonomy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSizeLimit = 3;

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<std::string> base;        // facet as "a,b,c"
    std::optional<std::string> path;        // facet path "a,b;b,c;..."
    std::optional<std::string> involution;  // map file
    std::optional<std::string> sigma;       // simplex as "a,b,c"
    std::optional<int> k;
    bool homology = false;
    bool cells = false;
    std::uint64_t seed = 0;
    std::optional<std::string> out;
};

const std::vector<std::string>& commands();

/// Runs one command.  The JSON report goes to `out` (or the --out file), a
/// short human summary to `err`.  Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace holonomy::cli
