#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbikt/character.hpp"
#include "orbikt/complex.hpp"

namespace orbikt::cli {

enum class OutputFormat { Table, Json };

struct RunConfig {
  std::string command;
  /// Positional arguments after the command (elements, file names).
  std::vector<std::string> args;
  /// A file path, or `builtin:<spec>`.
  std::string group_source;
  std::string complex_file;
  /// Extra `act` lines applied on top of the complex file.
  std::string action_file;
  std::string fixture;
  OutputFormat format = OutputFormat::Table;
  SubdivisionPolicy policy = SubdivisionPolicy::Auto;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_simplices = 1'000'000;
  std::string method = "bc";
  bool aggregate = false;
  bool emit = false;
  std::string out_dir = ".";
};

struct Flag {
  std::string kind;
  std::string ref;
  std::string detail;
};

struct Report {
  nlohmann::json meta;
  nlohmann::json payload;
  std::vector<Flag> flags;
  /// Human-readable rendering of the payload, without flags.
  std::string text;
  int exit_code = 0;
  /// Null on success, else {kind, module, message}.
  nlohmann::json error;

  nlohmann::json to_json() const;
  /// The document printed for the configured format.
  std::string render(OutputFormat format) const;
};

std::vector<std::string> command_names();

/// Never throws for library errors: they are captured in the report with exit
/// status 2 for refusals and 1 otherwise.
Report run(const RunConfig& config);

}  // namespace orbikt::cli
