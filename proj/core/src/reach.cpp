#include <bcn/reach.hpp>

#include <algorithm>
#include <stdexcept>

namespace bcn
{

state_set state_set::of( std::size_t universe, std::vector<std::uint64_t> members )
{
  std::sort( members.begin(), members.end() );
  members.erase( std::unique( members.begin(), members.end() ), members.end() );
  if ( !members.empty() && members.back() >= universe )
  {
    throw std::out_of_range( "state " + std::to_string( members.back() + 1 ) + " outside 1.." +
                             std::to_string( universe ) );
  }
  return { universe, std::move( members ) };
}

bool state_set::contains( std::uint64_t state ) const
{
  return std::binary_search( members.begin(), members.end(), state );
}

void set_family::add( state_set s, std::string name )
{
  if ( s.universe != universe )
  {
    throw shape_error( "set_family: set over a different state space" );
  }
  if ( !name.empty() || !names.empty() )
  {
    names.resize( sets.size() );
    names.push_back( std::move( name ) );
  }
  sets.push_back( std::move( s ) );
}

std::vector<std::pair<std::size_t, std::size_t>> duplicate_sets( const set_family& family )
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for ( std::size_t i = 0; i < family.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < family.size(); ++j )
    {
      if ( family.sets[i] == family.sets[j] )
      {
        out.emplace_back( i, j );
      }
    }
  }
  return out;
}

set_family finest_partition( std::size_t universe )
{
  set_family family{ universe, {}, {} };
  for ( std::uint64_t s = 0; s < universe; ++s )
  {
    family.add( state_set{ universe, { s } } );
  }
  return family;
}

boolean_matrix one_step_matrix( const algebraic_form& form )
{
  const auto states = form.state_count();
  boolean_matrix m( states, states );
  for ( std::size_t j = 0; j < form.control_count(); ++j )
  {
    for ( std::size_t a = 0; a < states; ++a )
    {
      m.set( form.successor( j, a ), a );
    }
  }
  return m;
}

boolean_matrix controllability_matrix( const boolean_matrix& m )
{
  if ( !m.square() )
  {
    throw shape_error( "controllability_matrix: one-step matrix is not square" );
  }
  std::vector<std::vector<std::size_t>> one_step( m.rows() );
  for ( std::size_t i = 0; i < m.rows(); ++i )
  {
    one_step[i] = m.row_support( i );
  }

  // Row i of M ×_B C is the union of the rows k of C with M(i, k) = 1.
  auto c = m;
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( std::size_t i = 0; i < c.rows(); ++i )
    {
      for ( auto k : one_step[i] )
      {
        if ( k != i )
        {
          changed |= c.or_row_from( i, c, k );
        }
      }
    }
  }
  return c;
}

controllability_report controllability_verdicts( boolean_matrix c )
{
  if ( !c.square() )
  {
    throw shape_error( "controllability_verdicts: matrix is not square" );
  }
  controllability_report report;
  report.controllable_at.resize( c.cols() );
  for ( std::size_t j = 0; j < c.cols(); ++j )
  {
    report.controllable_at[j] = c.column_all_ones( j );
  }
  report.controllable = c.all_ones();
  report.C = std::move( c );
  return report;
}

boolean_matrix index_matrix( const set_family& family )
{
  if ( family.sets.empty() )
  {
    throw std::invalid_argument( "index_matrix: empty set family" );
  }
  boolean_matrix j( family.universe, family.size() );
  for ( std::size_t k = 0; k < family.size(); ++k )
  {
    if ( family.sets[k].universe != family.universe )
    {
      throw shape_error( "index_matrix: set over a different state space" );
    }
    for ( auto s : family.sets[k].members )
    {
      j.set( s, k );
    }
  }
  return j;
}

boolean_matrix set_controllability_matrix( const boolean_matrix& c, const boolean_matrix& j0, const boolean_matrix& jd )
{
  if ( !c.square() || j0.rows() != c.rows() || jd.rows() != c.rows() )
  {
    throw shape_error( "set_controllability_matrix: index matrices must have " + std::to_string( c.rows() ) +
                       " rows" );
  }
  return bool_product( bool_product( transpose( jd ), c ), j0 );
}

set_controllability_report set_controllability_verdicts( boolean_matrix cs )
{
  set_controllability_report report;
  report.controllable_at.resize( cs.cols() );
  for ( std::size_t j = 0; j < cs.cols(); ++j )
  {
    report.controllable_at[j] = cs.column_all_ones( j );
  }
  report.controllable = cs.all_ones();
  report.CS = std::move( cs );
  return report;
}

set_family output_partition( const logical_matrix& h, bool drop_empty )
{
  std::vector<std::vector<std::uint64_t>> classes( h.rows() );
  for ( std::size_t a = 0; a < h.cols(); ++a )
  {
    classes[h[a]].push_back( a );
  }
  set_family family{ h.cols(), {}, {} };
  for ( auto& members : classes )
  {
    if ( drop_empty && members.empty() )
    {
      continue;
    }
    family.add( state_set{ h.cols(), std::move( members ) } );
  }
  return family;
}

boolean_matrix output_controllability_matrix( const boolean_matrix& c, const logical_matrix& h )
{
  if ( h.cols() != c.rows() )
  {
    throw shape_error( "output_controllability_matrix: H has " + std::to_string( h.cols() ) + " columns, C has " +
                       std::to_string( c.rows() ) + " rows" );
  }
  return bool_product( h.to_boolean(), c );
}

output_controllability_report output_controllability( const algebraic_form& form, const boolean_matrix& c )
{
  if ( form.trivial_output )
  {
    throw std::invalid_argument( "output controllability needs at least one output" );
  }
  output_controllability_report report;
  report.CY = output_controllability_matrix( c, form.H );
  report.controllable = report.CY.all_ones();
  return report;
}

} // namespace bcn
