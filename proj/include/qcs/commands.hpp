#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcs/config.hpp"

namespace qcs {

// Subcommand bodies; each writes its full report to `out`.
void cmd_sweep(const ExperimentConfig& config, std::ostream& out);
void cmd_echo_verify(const ExperimentConfig& config, std::ostream& out);
void cmd_table(const ExperimentConfig& config, std::ostream& out);

// Full command-line entry point (args excludes argv[0]).
// Exit codes: 0 success, 2 config error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcs
