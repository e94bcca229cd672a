// Command-line front end, kept separate from main() so tests can drive it
// with in-memory streams.

#ifndef ALBA_TOOLS_CLI_HPP_
#define ALBA_TOOLS_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>

#include "alba/semantics.hpp"

namespace alba::cli {

enum class OutputKind { Fo, Quasi, Trace, All };
enum class Format { Text, Json };

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kCounterexample = 3,
};

struct RunConfig {
  // Exactly one of these is set.
  std::optional<std::string> inequality;
  std::optional<std::string> file;

  OutputKind output = OutputKind::Fo;
  Format format = Format::Text;
  std::optional<int> verify;  // frame size bound, >= 1
  bool simplify = true;
  bool check_inductive = false;
};

// Runs one configuration. With --file every non-blank line not starting with
// '#' is one input, and the exit code is the largest per-input code.
// "verified on all frames n<=3 (530 frames)" or "counterexample: ...".
std::string describe(const CorrespondenceReport& report);
int exit_code_for(const CorrespondenceReport& report);

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace alba::cli

#endif  // ALBA_TOOLS_CLI_HPP_
