#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bcn::cli;

namespace
{

const std::string models = BCN_MODELS_DIR;

struct outcome
{
  int status;
  std::string out;
  std::string err;
};

outcome run( run_config cfg )
{
  std::ostringstream out, err;
  const int status = run_command( cfg, out, err );
  return { status, out.str(), err.str() };
}

run_config config( command cmd, const std::string& model )
{
  run_config cfg;
  cfg.cmd = cmd;
  cfg.model_path = models + "/" + model;
  return cfg;
}

std::string temp_file( const std::string& name, const std::string& text )
{
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream( path ) << text;
  return path.string();
}

} // namespace

TEST_SUITE( "cli" )
{

TEST_CASE( "command names round-trip" )
{
  for ( auto cmd : { command::compile, command::controllability, command::set_controllability,
                     command::output_controllability, command::observability } )
  {
    CHECK( parse_command( command_name( cmd ) ) == cmd );
  }
  CHECK_FALSE( parse_command( "observe" ) );
}

TEST_CASE( "compile" )
{
  const auto r = run( config( command::compile, "toy.bcn" ) );
  CHECK( r.status == holds );
  CHECK( r.out == "n=2 m=2 p=1\ndelta 4 [2 2 1 1 2 2 2 2 2 4 3 1 2 4 4 2]\ndelta 2 [1 2 2 2]\n" );
}

TEST_CASE( "controllability" )
{
  auto cfg = config( command::controllability, "toy.bcn" );
  cfg.emit_matrices = true;
  cfg.oracle_check = true;
  const auto r = run( cfg );
  CHECK( r.status == fails );
  CHECK( r.out.find( "controllable at: {3}\n" ) != std::string::npos );
  CHECK( r.out.find( "C:\n4 4\n1111\n1111\n0010\n1111\n" ) != std::string::npos );
  CHECK( r.out.find( "verdict: not controllable\n" ) != std::string::npos );
  CHECK( r.out.find( "oracle: agree\n" ) != std::string::npos );
}

TEST_CASE( "set controllability" )
{
  auto cfg = config( command::set_controllability, "toy.bcn" );
  cfg.sets_path = models + "/toy_sets_feasible.json";
  cfg.oracle_check = true;
  auto r = run( cfg );
  CHECK( r.status == holds );
  CHECK( r.out.find( "C_S:\n2 2\n11\n11\n" ) != std::string::npos );
  CHECK( r.out.find( "oracle: agree\n" ) != std::string::npos );

  cfg.sets_path = models + "/toy_sets_infeasible.json";
  r = run( cfg );
  CHECK( r.status == fails );
  CHECK( r.out.find( "C_S:\n1 2\n10\n" ) != std::string::npos );

  cfg.sets_path.reset();
  CHECK( run( cfg ).status == error );
}

TEST_CASE( "output controllability" )
{
  auto cfg = config( command::output_controllability, "toy.bcn" );
  cfg.oracle_check = true;
  const auto r = run( cfg );
  CHECK( r.status == holds );
  CHECK( r.out.find( "C_Y:\n2 4\n1111\n1111\n" ) != std::string::npos );
  CHECK( r.out.find( "oracle: agree\n" ) != std::string::npos );
}

TEST_CASE( "observability" )
{
  auto cfg = config( command::observability, "lac_operon.bcn" );
  cfg.witness = true;
  cfg.oracle_check = true;
  cfg.emit_matrices = true;
  auto r = run( cfg );
  CHECK( r.status == fails );
  CHECK( r.out.find( "{1,2} -> indistinguishable\n" ) != std::string::npos );
  CHECK( r.out.find( "{3,4} -> distinguishable [witness: u=(5),T=1]\n" ) != std::string::npos );
  CHECK( r.out.find( "Theta: {2,20,38,56}\n" ) != std::string::npos );
  CHECK( r.out.find( "C_S:\n1 4\n0101\n" ) != std::string::npos );
  CHECK( r.out.find( "oracle: agree\n" ) != std::string::npos );

  cfg.oracle_check = false;
  cfg.output_matrix_path = models + "/lac_operon_h3.txt";
  r = run( cfg );
  CHECK( r.status == holds );
  CHECK( r.out.find( "{6,8} -> distinguishable [witness: u=(5),T=1]\n" ) != std::string::npos );
  CHECK( r.out.find( "verdict: observable\n" ) != std::string::npos );
}

TEST_CASE( "usage and input errors" )
{
  auto cfg = config( command::controllability, "missing.bcn" );
  auto r = run( cfg );
  CHECK( r.status == error );
  CHECK( r.err.find( "cannot open" ) != std::string::npos );

  cfg = config( command::controllability, "toy.bcn" );
  cfg.witness = true;
  CHECK( run( cfg ).status == error );

  cfg = config( command::compile, "toy.bcn" );
  cfg.oracle_check = true;
  CHECK( run( cfg ).status == error );

  cfg = config( command::observability, "lac_operon.bcn" );
  cfg.oracle_check = true;
  cfg.output_matrix_path = models + "/lac_operon_h3.txt";
  CHECK( run( cfg ).status == error );

  cfg = config( command::compile, "toy.bcn" );
  cfg.model_path = temp_file( "bcn_cli_bad.bcn", "network t\nstates: x1\ninputs: u1\noutputs: y1\nx1' = u1\ny1 = x1 | u1\n" );
  r = run( cfg );
  CHECK( r.status == error );
  CHECK( r.err == cfg.model_path + ":6:11: error: output references input 'u1'\n" );

  cfg = config( command::controllability, "toy.bcn" );
  cfg.max_variables = 3;
  CHECK( run( cfg ).status == error );

  cfg = config( command::observability, "toy.bcn" );
  cfg.model_path = temp_file( "bcn_cli_flip.bcn", "network f\nstates: x1\nx1' = !x1\n" );
  CHECK( run( cfg ).status == error );
}

TEST_CASE( "reports are deterministic" )
{
  auto cfg = config( command::observability, "lac_operon.bcn" );
  cfg.witness = true;
  cfg.emit_matrices = true;
  const auto a = run( cfg );
  const auto b = run( cfg );
  CHECK( a.out == b.out );
  CHECK( a.status == b.status );
}

}
