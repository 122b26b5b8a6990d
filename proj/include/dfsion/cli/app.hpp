#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dfsion::cli {

// Parses argv-style arguments (without the program name), runs one
// subcommand and returns its exit code: 0 ok, 1 usage/config error,
// 2 physics check failed. Reports go to `out` unless --out is given;
// diagnostics and the one-line verdict go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfsion::cli
