#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treewalk/tree.hpp"
#include "treewalk/words.hpp"

namespace treewalk {

/// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (`args` excludes the program name), writing results
/// to `out` and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Undirected DOT graph. With a context, edges carry their word labels in
/// the chosen host and are coloured by side.
std::string format_dot(const Tree& t, const PathContext* ctx = nullptr, Host host = Host::original,
                       const std::string& name = "T");

}  // namespace treewalk
