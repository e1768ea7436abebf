#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main( int argc, char** argv )
{
  using namespace bcn::cli;

  CLI::App app{ "Boolean control network analysis: compile, controllability, set/output controllability, "
                "observability" };
  app.require_subcommand( 1 );

  run_config cfg;
  std::string emit_format = "algebraic";

  auto add_common = [&]( CLI::App* sub ) {
    sub->add_option( "model", cfg.model_path, "network description (.bcn)" )->required();
    sub->add_option( "--max-vars", cfg.max_variables, "ceiling on n + m (default 20)" );
  };
  auto add_analysis = [&]( CLI::App* sub ) {
    add_common( sub );
    sub->add_flag( "--emit", cfg.emit_matrices, "dump the intermediate matrices" );
    sub->add_flag( "--oracle", cfg.oracle_check, "cross-check against the brute-force oracle" );
  };

  auto* compile = app.add_subcommand( "compile", "print the algebraic form (L, H)" );
  add_common( compile );
  compile->add_option( "--emit", emit_format, "output format" )->check( CLI::IsMember( { "algebraic" } ) );
  compile->add_option( "--output-matrix", cfg.output_matrix_path, "file with H in `delta` text form" );

  auto* ctrl = app.add_subcommand( "controllability", "controllability matrix and verdicts" );
  add_analysis( ctrl );

  auto* set_ctrl = app.add_subcommand( "set-controllability", "set controllability between families of sets" );
  add_analysis( set_ctrl );
  set_ctrl->add_option( "--sets", cfg.sets_path, "JSON set specification" )->required();

  auto* out_ctrl = app.add_subcommand( "output-controllability", "output controllability" );
  add_analysis( out_ctrl );
  out_ctrl->add_option( "--output-matrix", cfg.output_matrix_path, "file with H in `delta` text form" );

  auto* observe = app.add_subcommand( "observability", "observability via the pair system" );
  add_analysis( observe );
  observe->add_flag( "--witness", cfg.witness, "print shortest distinguishing control sequences" );
  observe->add_option( "--output-matrix", cfg.output_matrix_path, "file with H in `delta` text form" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int status = app.exit( e );
    return status == 0 ? 0 : error;
  }

  cfg.cmd = *parse_command( app.get_subcommands().front()->get_name() );
  return run_command( cfg, std::cout, std::cerr );
}
