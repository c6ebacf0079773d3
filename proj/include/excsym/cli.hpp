#pragma once

// Command-line front end, callable in-process for tests.
//
// Exit codes: 0 success, 1 a MISMATCH/UNRESOLVED record, a failed check or
// an exceeded resource ceiling, 2 usage error (bad flag, unknown space,
// malformed annihilator). Data goes to `out`, diagnostics to `err`.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace excsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// EXCSYM_CACHE_DIR, else $XDG_CACHE_HOME/excsym, else $HOME/.cache/excsym.
/// Empty when none of these can be determined.
std::filesystem::path default_cache_dir();

}  // namespace excsym::cli
