#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qvlc {

/// Parsed command line. `input` may name a JSON file or hold an inline
/// spectrum like "0.5,0.25,0.25" for diagonal sources.
struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string codebook;
  int k = 2;
  double t = 0.0;
  std::string alpha_list = "0,0.5,1,2,4";
  int K_max = 3;
  std::uint64_t seed = 0;
  int trials = 20;
  std::string format = "table";
  std::string output;
  std::string t_grid = "0,0.5,1,2,4,8";
  bool k_given = false;
  bool t_given = false;
  bool trials_given = false;
};

/// Throws UsageError on bad flags; a help request yields subcommand "help".
CliConfig parse_args(const std::vector<std::string>& args);

/// Runs the subcommand. Returns 0 on success, 1 when verification fails.
/// Errors propagate as exceptions; cli_main maps them to exit codes.
int execute(const CliConfig& config);

/// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 missing file,
/// 4 malformed input, 5 internal numeric error.
int cli_main(int argc, const char* const* argv);

} // namespace qvlc
