#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sgal::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsage = 2, kGuardrail = 3 };

struct RunConfig {
  std::string command;
  std::optional<std::string> catalog;
  std::optional<std::string> file;
  bool json = false;
  bool require_special = false;
  bool standard = false;
  std::size_t bases = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_order;  ///< exponent of 2
};

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs; the full process entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

const std::vector<std::string>& command_names();

}  // namespace sgal::cli
