#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxcent/coxeter_matrix.hpp"

namespace coxcent::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Parses a matrix document {"rank": n, "m": [[...]]} with 0 for infinity.
CoxeterMatrix parse_matrix_json(const nlohmann::json& doc);

/// Runs one command line (args excludes the program name). Writes a single
/// JSON document to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxcent::cli
