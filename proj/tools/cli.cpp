#include "cli.hpp"

#include <bcn/boolmat.hpp>
#include <bcn/codec.hpp>
#include <bcn/compiler.hpp>
#include <bcn/netlang.hpp>
#include <bcn/observe.hpp>
#include <bcn/oracle.hpp>
#include <bcn/reach.hpp>
#include <bcn/set_spec.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bcn::cli
{

namespace
{

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw io_error( "cannot open '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string one_based_list( const std::vector<std::uint64_t>& values )
{
  std::string out = "{";
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    out += ( i == 0 ? "" : "," ) + std::to_string( values[i] + 1 );
  }
  return out + "}";
}

std::string set_name( const set_family& family, std::size_t k )
{
  if ( k < family.names.size() && !family.names[k].empty() )
  {
    return family.names[k];
  }
  return "#" + std::to_string( k + 1 );
}

void dump( std::ostream& out, const char* label, const boolean_matrix& m )
{
  out << label << ":\n" << to_text( m );
}

void report_oracle( std::ostream& out, bool agree )
{
  out << "oracle: " << ( agree ? "agree" : "DISAGREE" ) << "\n";
}

int verdict_status( bool holds_, bool oracle_disagrees )
{
  if ( oracle_disagrees )
  {
    return error;
  }
  return holds_ ? holds : fails;
}

std::vector<std::uint64_t> oracle_outputs( const network_model& model )
{
  std::vector<std::uint64_t> out;
  const auto states = std::uint64_t{ 1 } << model.n();
  for ( std::uint64_t a = 0; a < states; ++a )
  {
    assignment env;
    const auto bits = decode_state( a, model.n() );
    for ( std::size_t i = 0; i < model.n(); ++i )
    {
      env[model.states[i]] = bits[i];
    }
    std::vector<bool> y;
    for ( const auto& h : model.output_maps )
    {
      y.push_back( eval_expr( h, env ) );
    }
    out.push_back( encode_state( y ) );
  }
  return out;
}

int run_controllability( const network_model& model, const algebraic_form& form, const run_config& cfg,
                         std::ostream& out )
{
  const auto m = one_step_matrix( form );
  const auto report = controllability_verdicts( controllability_matrix( m ) );

  std::vector<std::uint64_t> at;
  for ( std::size_t j = 0; j < report.controllable_at.size(); ++j )
  {
    if ( report.controllable_at[j] )
    {
      at.push_back( j );
    }
  }
  out << "network " << model.name << ": " << form.state_count() << " states, " << form.control_count()
      << " controls\n";
  out << "controllable at: " << ( at.empty() ? "none" : one_based_list( at ) ) << "\n";
  if ( cfg.emit_matrices )
  {
    dump( out, "M", m );
    dump( out, "C", report.C );
  }
  out << "verdict: " << ( report.controllable ? "controllable" : "not controllable" ) << "\n";

  bool disagree = false;
  if ( cfg.oracle_check )
  {
    disagree = oracle::reach_oracle( model ) != report.C;
    report_oracle( out, !disagree );
  }
  return verdict_status( report.controllable, disagree );
}

int run_set_controllability( const network_model& model, const algebraic_form& form, const run_config& cfg,
                             std::ostream& out, std::ostream& err )
{
  const auto spec = parse_set_spec( read_file( *cfg.sets_path ), form.n );
  for ( const auto& w : spec.warnings )
  {
    err << "warning: " << w << "\n";
  }
  const auto m = one_step_matrix( form );
  const auto c = controllability_matrix( m );
  const auto j0 = index_matrix( spec.initial );
  const auto jd = index_matrix( spec.destination );
  const auto report = set_controllability_verdicts( set_controllability_matrix( c, j0, jd ) );

  out << "network " << model.name << ": " << spec.initial.size() << " initial sets, " << spec.destination.size()
      << " destination sets\n";
  for ( std::size_t j = 0; j < spec.initial.size(); ++j )
  {
    out << "from " << set_name( spec.initial, j ) << " " << one_based_list( spec.initial.sets[j].members ) << ":";
    for ( std::size_t i = 0; i < spec.destination.size(); ++i )
    {
      out << " " << set_name( spec.destination, i ) << "=" << ( report.reachable( i, j ) ? 1 : 0 );
    }
    out << ( report.controllable_at[j] ? "  (set controllable)" : "" ) << "\n";
  }
  if ( cfg.emit_matrices )
  {
    dump( out, "M", m );
    dump( out, "C", c );
    dump( out, "J0", j0 );
    dump( out, "Jd", jd );
  }
  dump( out, "C_S", report.CS );
  out << "verdict: " << ( report.controllable ? "set controllable" : "not set controllable" ) << "\n";

  bool disagree = false;
  if ( cfg.oracle_check )
  {
    const auto reach = oracle::reach_oracle( model );
    for ( std::size_t j = 0; j < spec.initial.size(); ++j )
    {
      for ( std::size_t i = 0; i < spec.destination.size(); ++i )
      {
        bool any = false;
        for ( auto a : spec.initial.sets[j].members )
        {
          for ( auto b : spec.destination.sets[i].members )
          {
            any = any || reach( b, a );
          }
        }
        disagree = disagree || any != report.reachable( i, j );
      }
    }
    report_oracle( out, !disagree );
  }
  return verdict_status( report.controllable, disagree );
}

int run_output_controllability( const network_model& model, const algebraic_form& form, const run_config& cfg,
                                std::ostream& out )
{
  const auto m = one_step_matrix( form );
  const auto c = controllability_matrix( m );
  const auto report = output_controllability( form, c );

  out << "network " << model.name << ": " << form.state_count() << " states, " << form.output_count()
      << " output values\n";
  if ( cfg.emit_matrices )
  {
    dump( out, "M", m );
    dump( out, "C", c );
    out << "H: " << to_text( form.H ) << "\n";
  }
  dump( out, "C_Y", report.CY );
  out << "verdict: " << ( report.controllable ? "output controllable" : "not output controllable" ) << "\n";

  bool disagree = false;
  if ( cfg.oracle_check )
  {
    const auto reach = oracle::reach_oracle( model );
    const auto y = oracle_outputs( model );
    for ( std::size_t a = 0; a < form.state_count() && !disagree; ++a )
    {
      for ( std::size_t v = 0; v < form.output_count(); ++v )
      {
        bool any = false;
        for ( std::size_t b = 0; b < form.state_count(); ++b )
        {
          any = any || ( reach( b, a ) && y[b] == v );
        }
        disagree = disagree || any != report.CY( v, a );
      }
    }
    report_oracle( out, !disagree );
  }
  return verdict_status( report.controllable, disagree );
}

int run_observability( const network_model& model, const algebraic_form& form, const run_config& cfg,
                       std::ostream& out )
{
  observability_options options;
  options.witnesses = cfg.witness;
  const auto report = observability_verdict( form, options );

  out << "network " << model.name << ": " << report.partition.theta.size() << " output-equal pairs, "
      << report.partition.xi_count << " distinguishable ordered pairs\n";
  for ( const auto& pair : report.pairs )
  {
    out << "{" << pair.z + 1 << "," << pair.x + 1 << "} -> "
        << ( pair.distinguishable ? "distinguishable" : "indistinguishable" );
    if ( pair.witness )
    {
      out << " [witness: u=(";
      for ( std::size_t t = 0; t < pair.witness->controls.size(); ++t )
      {
        out << ( t == 0 ? "" : "," ) << pair.witness->controls[t] + 1;
      }
      out << "),T=" << pair.witness->T << "]";
    }
    out << "\n";
  }
  if ( cfg.emit_matrices )
  {
    out << "Theta: " << one_based_list( report.partition.theta ) << "\n";
    out << "Xi: " << one_based_list( report.partition.xi_members() ) << "\n";
    dump( out, "C_S", report.CS );
  }
  out << "verdict: " << ( report.observable ? "observable" : "not observable" ) << "\n";

  bool disagree = false;
  if ( cfg.oracle_check )
  {
    const auto flags = oracle::distinguish_oracle( model );
    disagree = flags.size() != report.pairs.size();
    for ( std::size_t k = 0; k < flags.size() && !disagree; ++k )
    {
      const auto& p = report.pairs[k];
      disagree = flags[k].z != p.z || flags[k].x != p.x || flags[k].distinguishable != p.distinguishable;
    }
    report_oracle( out, !disagree );
  }
  return verdict_status( report.observable, disagree );
}

void validate( const run_config& cfg )
{
  if ( cfg.cmd == command::set_controllability && !cfg.sets_path )
  {
    throw usage_error( "set-controllability requires --sets <file>" );
  }
  if ( cfg.cmd != command::set_controllability && cfg.sets_path )
  {
    throw usage_error( "--sets applies to set-controllability only" );
  }
  if ( cfg.witness && cfg.cmd != command::observability )
  {
    throw usage_error( "--witness applies to observability only" );
  }
  if ( cfg.oracle_check && cfg.cmd == command::compile )
  {
    throw usage_error( "--oracle applies to the analysis commands" );
  }
  if ( cfg.oracle_check && cfg.output_matrix_path )
  {
    throw usage_error( "--oracle cannot check an output matrix supplied with --output-matrix" );
  }
}

} // namespace

std::optional<command> parse_command( std::string_view name )
{
  for ( auto cmd : { command::compile, command::controllability, command::set_controllability,
                     command::output_controllability, command::observability } )
  {
    if ( command_name( cmd ) == name )
    {
      return cmd;
    }
  }
  return std::nullopt;
}

std::string_view command_name( command cmd )
{
  switch ( cmd )
  {
  case command::compile:
    return "compile";
  case command::controllability:
    return "controllability";
  case command::set_controllability:
    return "set-controllability";
  case command::output_controllability:
    return "output-controllability";
  case command::observability:
    return "observability";
  }
  return "";
}

int run_command( const run_config& cfg, std::ostream& out, std::ostream& err )
{
  try
  {
    validate( cfg );
    const auto source = read_file( cfg.model_path );
    network_model model;
    try
    {
      model = parse_network( source );
    }
    catch ( const parse_error& e )
    {
      err << cfg.model_path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
      return error;
    }

    auto form = compile_network( model, { cfg.max_variables } );
    if ( cfg.output_matrix_path )
    {
      form = with_output_matrix( std::move( form ), parse_logical_matrix( read_file( *cfg.output_matrix_path ) ) );
    }

    switch ( cfg.cmd )
    {
    case command::compile:
      out << to_text( form );
      return holds;
    case command::controllability:
      return run_controllability( model, form, cfg, out );
    case command::set_controllability:
      return run_set_controllability( model, form, cfg, out, err );
    case command::output_controllability:
      return run_output_controllability( model, form, cfg, out );
    case command::observability:
      return run_observability( model, form, cfg, out );
    }
  }
  catch ( const usage_error& e )
  {
    err << "usage error: " << e.what() << "\n";
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << "\n";
  }
  return error;
}

} // namespace bcn::cli
