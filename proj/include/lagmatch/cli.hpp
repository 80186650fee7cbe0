/**
 * Command dispatch behind the `lagmatch` executable. Reports are built as
 * ordered JSON objects, so key order and number formatting are fixed, and are
 * printed either as JSON or as indented text.
 */
#pragma once

#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>

namespace lagmatch {

enum ExitCode : int {
  kExitOk = 0,
  kExitSchema = 2,
  kExitInconsistent = 3,
  kExitResolution = 4,
};

struct CommandRequest {
  std::string command;  ///< dim, tqft-eval, example, cz, gradings
  std::optional<std::string> input_file;
  std::optional<std::string> fixture;
  std::string example_name;
  int m = 0;
  int n = 1;
  bool json = false;
  unsigned threads = 1;
};

/// Reads LAGMATCH_THREADS (default 1); SchemaError unless it is a positive
/// integer.
unsigned threads_from_environment();

/// Builds the report; throws the library errors.
nlohmann::ordered_json build_report(const CommandRequest& request);

/// Text rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

/// Runs a command end to end: report on `out`, diagnostics on `err`.
int run_command(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace lagmatch
