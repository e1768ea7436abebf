#include <bcn/oracle.hpp>

#include <bcn/codec.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace bcn::oracle
{

namespace
{

assignment bind_values( const std::vector<std::string>& names, const std::vector<bool>& values, assignment env = {} )
{
  for ( std::size_t i = 0; i < names.size(); ++i )
  {
    env[names[i]] = values[i];
  }
  return env;
}

// next[j][a]: successor of state a under control j.
std::vector<std::vector<std::uint64_t>> simulate_steps( const network_model& model )
{
  const auto states = std::uint64_t{ 1 } << model.n();
  const auto controls = std::uint64_t{ 1 } << model.m();
  std::vector<std::vector<std::uint64_t>> next( controls, std::vector<std::uint64_t>( states ) );
  for ( std::uint64_t j = 0; j < controls; ++j )
  {
    const auto u = decode_state( j, model.m() );
    for ( std::uint64_t a = 0; a < states; ++a )
    {
      const auto env = bind_values( model.inputs, u, bind_values( model.states, decode_state( a, model.n() ) ) );
      std::vector<bool> successor( model.n() );
      for ( std::size_t i = 0; i < model.n(); ++i )
      {
        successor[i] = eval_expr( model.updates[i], env );
      }
      next[j][a] = encode_state( successor );
    }
  }
  return next;
}

std::vector<std::vector<bool>> simulate_outputs( const network_model& model )
{
  const auto states = std::uint64_t{ 1 } << model.n();
  std::vector<std::vector<bool>> out( states );
  for ( std::uint64_t a = 0; a < states; ++a )
  {
    const auto env = bind_values( model.states, decode_state( a, model.n() ) );
    for ( const auto& h : model.output_maps )
    {
      out[a].push_back( eval_expr( h, env ) );
    }
  }
  return out;
}

} // namespace

transition_graph build_transition_graph( const network_model& model )
{
  if ( model.n() + model.m() > max_reach_variables )
  {
    throw size_limit_error( "oracle: n+m = " + std::to_string( model.n() + model.m() ) + " exceeds " +
                            std::to_string( max_reach_variables ) );
  }
  const auto next = simulate_steps( model );
  transition_graph graph;
  graph.state_count = std::size_t{ 1 } << model.n();
  graph.successors.resize( graph.state_count );
  for ( std::size_t a = 0; a < graph.state_count; ++a )
  {
    auto& succ = graph.successors[a];
    for ( const auto& step : next )
    {
      succ.push_back( step[a] );
    }
    std::sort( succ.begin(), succ.end() );
    succ.erase( std::unique( succ.begin(), succ.end() ), succ.end() );
  }
  return graph;
}

boolean_matrix reach_oracle( const network_model& model )
{
  const auto graph = build_transition_graph( model );
  boolean_matrix reach( graph.state_count, graph.state_count );
  for ( std::size_t source = 0; source < graph.state_count; ++source )
  {
    std::vector<bool> seen( graph.state_count, false );
    std::deque<std::uint64_t> queue;
    for ( auto s : graph.successors[source] )
    {
      if ( !seen[s] )
      {
        seen[s] = true;
        queue.push_back( s );
      }
    }
    while ( !queue.empty() )
    {
      const auto a = queue.front();
      queue.pop_front();
      reach.set( a, source );
      for ( auto s : graph.successors[a] )
      {
        if ( !seen[s] )
        {
          seen[s] = true;
          queue.push_back( s );
        }
      }
    }
  }
  return reach;
}

std::vector<pair_flag> distinguish_oracle( const network_model& model )
{
  if ( 2 * model.n() > max_pair_bits || model.n() + model.m() > max_reach_variables )
  {
    throw size_limit_error( "oracle: network too large for joint-state search" );
  }
  const auto next = simulate_steps( model );
  const auto outputs = simulate_outputs( model );
  const auto states = std::uint64_t{ 1 } << model.n();

  std::vector<pair_flag> flags;
  for ( std::uint64_t z0 = 0; z0 < states; ++z0 )
  {
    for ( std::uint64_t x0 = z0 + 1; x0 < states; ++x0 )
    {
      if ( outputs[z0] != outputs[x0] )
      {
        continue;
      }
      std::vector<bool> seen( states * states, false );
      std::deque<std::pair<std::uint64_t, std::uint64_t>> queue{ { z0, x0 } };
      seen[z0 * states + x0] = true;
      bool found = false;
      while ( !queue.empty() && !found )
      {
        const auto [z, x] = queue.front();
        queue.pop_front();
        if ( outputs[z] != outputs[x] )
        {
          found = true;
          break;
        }
        for ( const auto& step : next )
        {
          const auto zn = step[z], xn = step[x];
          if ( !seen[zn * states + xn] )
          {
            seen[zn * states + xn] = true;
            queue.emplace_back( zn, xn );
          }
        }
      }
      flags.push_back( { z0, x0, found } );
    }
  }
  return flags;
}

} // namespace bcn::oracle
