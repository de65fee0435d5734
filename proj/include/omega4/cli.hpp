#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega4 {

/// Runs one subcommand. Exit codes: 0 success; 1 a verified mathematical
/// check failed; 2 parse/validation error; 3 resource bound exceeded;
/// 4 only a probabilistic verdict was reached under --strict.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace omega4
