#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recperm {

/// Runs the command-line front end. Exit status: 0 on success, 1 on a
/// verification failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recperm
