#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "valfield/io.hpp"

namespace valfield::cli {

enum ExitCode : int { Ok = 0, Internal = 1, InputError = 2, OracleMismatch = 3 };

/**
 * Entry point of the `valfield` tool; `args` excludes the program name.
 *
 *   valfield [--verify] [--seed N] [--field JSON] [-o PATH] [--summary] TASK [SUB] FILE
 *
 * FILE is a JSON problem or "-" for `in`. The result JSON goes to `out`
 * (or PATH); diagnostics and the --summary text go to `err`.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Task tag for a subcommand path such as {"poly", "project"} -> "poly-project".
std::string task_name(const std::string& command, const std::string& sub);

/// Solves one problem; adds an "oracle" block when verify is set.
io::Json solve_task(const std::string& task, const io::Json& problem, const Field& field, bool verify,
                    std::uint64_t seed);

/// One-paragraph human summary of a result produced by solve_task.
std::string render_summary(const std::string& task, const io::Json& result);

} // namespace valfield::cli
