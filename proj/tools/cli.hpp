#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace bcn::cli
{

enum class command
{
  compile,
  controllability,
  set_controllability,
  output_controllability,
  observability
};

std::optional<command> parse_command( std::string_view name );
std::string_view command_name( command cmd );

struct run_config
{
  command cmd = command::compile;
  std::string model_path;
  std::optional<std::string> sets_path;          ///< required for set-controllability only
  std::optional<std::string> output_matrix_path; ///< canonical `delta` text replacing the compiled H
  bool emit_matrices = false;
  bool witness = false;
  bool oracle_check = false;
  std::size_t max_variables = 20;
};

/// Exit status: the property holds, does not hold, or the run failed.
enum exit_status : int
{
  holds = 0,
  fails = 1,
  error = 2
};

/// Runs one command. The report goes to `out`; diagnostics and warnings go to `err`.
int run_command( const run_config& cfg, std::ostream& out, std::ostream& err );

} // namespace bcn::cli
