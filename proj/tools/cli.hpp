#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cbf::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kGuardRefused = 3,
    kNotApplicable = 4,
};

/// Guard precedence: explicit flag, then the CBF_GUARD value, then the library default.
[[nodiscard]] std::uint64_t resolve_guard(std::optional<std::uint64_t> flag, const char* env_value);

/// Entry point of the `cbf` tool. Data goes to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cbf::cli
