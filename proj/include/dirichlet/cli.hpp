// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_CLI_HPP
#define DIRICHLET_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dirichlet::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Runs one command. args excludes the program name. `color` enables ANSI
/// highlighting of diagnostics on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace dirichlet::cli

#endif  // DIRICHLET_CLI_HPP
