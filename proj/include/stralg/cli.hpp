#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stralg::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

inline constexpr int kSchemaVersion = 1;

/// Runs one command; `args` excludes the program name. Structured output
/// (`--json`) is a single JSON document on `out`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stralg::cli
