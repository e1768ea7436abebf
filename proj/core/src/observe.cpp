#include <bcn/observe.hpp>

#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bcn
{

namespace
{

constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();

void check_pair_space( std::size_t n )
{
  if ( 2 * n > max_pair_state_bits )
  {
    throw size_limit_error( "pair space of a " + std::to_string( n ) + "-state network exceeds 2^" +
                            std::to_string( max_pair_state_bits ) );
  }
}

void check_outputs( const algebraic_form& form )
{
  if ( form.trivial_output )
  {
    throw std::invalid_argument( "observability needs at least one output" );
  }
}

// Length of the shortest path into Ξ for every pair, by backward search from Ξ.
std::vector<std::uint32_t> distances_to_xi( const extended_system& ext, const pair_partition& part )
{
  const auto pairs = ext.pair_count();
  const auto controls = ext.per_control.size();

  std::vector<std::uint32_t> offsets( pairs + 1, 0 );
  for ( std::size_t j = 0; j < controls; ++j )
  {
    for ( auto t : ext.per_control[j].columns() )
    {
      ++offsets[t + 1];
    }
  }
  for ( std::size_t w = 0; w < pairs; ++w )
  {
    offsets[w + 1] += offsets[w];
  }
  std::vector<std::uint32_t> sources( offsets.back() );
  {
    auto fill = offsets;
    for ( std::size_t j = 0; j < controls; ++j )
    {
      const auto cols = ext.per_control[j].columns();
      for ( std::size_t w = 0; w < pairs; ++w )
      {
        sources[fill[cols[w]]++] = static_cast<std::uint32_t>( w );
      }
    }
  }

  std::vector<std::uint32_t> dist( pairs, unreached );
  std::deque<std::uint32_t> queue;
  for ( std::size_t w = 0; w < pairs; ++w )
  {
    if ( part.is_xi( w ) )
    {
      dist[w] = 0;
      queue.push_back( static_cast<std::uint32_t>( w ) );
    }
  }
  while ( !queue.empty() )
  {
    const auto t = queue.front();
    queue.pop_front();
    for ( auto k = offsets[t]; k < offsets[t + 1]; ++k )
    {
      const auto s = sources[k];
      if ( dist[s] == unreached )
      {
        dist[s] = dist[t] + 1;
        queue.push_back( s );
      }
    }
  }
  return dist;
}

distinguishing_witness follow_distances( const extended_system& ext, const std::vector<std::uint32_t>& dist,
                                         std::uint64_t w )
{
  distinguishing_witness witness;
  witness.T = dist[w];
  for ( auto d = dist[w]; d > 0; --d )
  {
    for ( std::size_t j = 0; j < ext.per_control.size(); ++j )
    {
      const auto next = ext.successor( j, w );
      if ( dist[next] == d - 1 )
      {
        witness.controls.push_back( static_cast<std::uint32_t>( j ) );
        w = next;
        break;
      }
    }
  }
  return witness;
}

} // namespace

std::uint64_t pair_index( std::uint64_t z, std::uint64_t x, std::size_t n )
{
  const auto states = std::uint64_t{ 1 } << n;
  if ( z >= states || x >= states )
  {
    throw std::out_of_range( "pair_index: state outside 1.." + std::to_string( states ) );
  }
  return z * states + x;
}

std::pair<std::uint64_t, std::uint64_t> pair_states( std::uint64_t w, std::size_t n )
{
  return { w >> n, w & ( ( std::uint64_t{ 1 } << n ) - 1 ) };
}

bool pair_partition::is_diagonal( std::uint64_t w ) const
{
  const auto [z, x] = pair_states( w, n );
  return z == x;
}

std::vector<std::uint64_t> pair_partition::xi_members() const
{
  std::vector<std::uint64_t> out;
  out.reserve( xi_count );
  for ( std::size_t w = 0; w < xi.size(); ++w )
  {
    if ( xi[w] )
    {
      out.push_back( w );
    }
  }
  return out;
}

pair_partition partition_pairs( const logical_matrix& h, std::size_t n )
{
  check_pair_space( n );
  const auto states = std::size_t{ 1 } << n;
  if ( h.cols() != states )
  {
    throw shape_error( "partition_pairs: H has " + std::to_string( h.cols() ) + " columns; expected " +
                       std::to_string( states ) );
  }
  pair_partition part;
  part.n = n;
  part.xi.assign( states * states, false );
  for ( std::uint64_t z = 0; z < states; ++z )
  {
    for ( std::uint64_t x = 0; x < states; ++x )
    {
      if ( h[z] != h[x] )
      {
        part.xi[z * states + x] = true;
        ++part.xi_count;
      }
      else if ( z < x )
      {
        part.theta.push_back( z * states + x );
      }
    }
  }
  return part;
}

boolean_matrix extended_system::one_step_dense() const
{
  if ( 2 * n > max_dense_pair_bits )
  {
    throw size_limit_error( "dense extended system limited to 2n <= " + std::to_string( max_dense_pair_bits ) );
  }
  boolean_matrix m( pair_count(), pair_count() );
  for ( const auto& block : per_control )
  {
    for ( std::size_t w = 0; w < block.cols(); ++w )
    {
      m.set( block[w], w );
    }
  }
  return m;
}

extended_system build_extended_system( const algebraic_form& form )
{
  check_pair_space( form.n );
  if ( 2 * form.n + form.m > max_extended_entry_bits )
  {
    throw size_limit_error( "extended system with m + 2n = " + std::to_string( 2 * form.n + form.m ) +
                            " exceeds 2^" + std::to_string( max_extended_entry_bits ) + " transitions" );
  }
  const auto states = form.state_count();
  extended_system ext;
  ext.n = form.n;
  ext.m = form.m;
  ext.per_control.reserve( form.control_count() );
  for ( std::size_t j = 0; j < form.control_count(); ++j )
  {
    std::vector<logical_matrix::index_type> cols( states * states );
    for ( std::size_t z = 0; z < states; ++z )
    {
      const auto zn = form.successor( j, z );
      for ( std::size_t x = 0; x < states; ++x )
      {
        cols[z * states + x] = static_cast<logical_matrix::index_type>( zn * states + form.successor( j, x ) );
      }
    }
    ext.per_control.emplace_back( states * states, std::move( cols ) );
  }
  return ext;
}

observability_sets observability_setup( const pair_partition& partition )
{
  const auto universe = partition.pair_count();
  observability_sets sets{ { universe, {}, {} }, { universe, {}, {} } };
  for ( auto w : partition.theta )
  {
    sets.initial.add( state_set{ universe, { w } } );
  }
  sets.destination.add( state_set{ universe, partition.xi_members() } );
  return sets;
}

observability_report observability_verdict( const algebraic_form& form, const observability_options& options )
{
  check_outputs( form );
  observability_report report;
  report.partition = partition_pairs( form.H, form.n );
  const auto& theta = report.partition.theta;
  report.CS = boolean_matrix( 1, theta.size() );
  for ( auto w : theta )
  {
    const auto [z, x] = pair_states( w, form.n );
    report.pairs.push_back( { z, x, false, std::nullopt } );
  }
  if ( theta.empty() )
  {
    report.observable = true;
    return report;
  }

  const auto ext = build_extended_system( form );
  if ( options.engine == observability_engine::dense )
  {
    const auto c = controllability_matrix( ext.one_step_dense() );
    const auto sets = observability_setup( report.partition );
    report.CS = set_controllability_matrix( c, index_matrix( sets.initial ), index_matrix( sets.destination ) );
    for ( std::size_t k = 0; k < theta.size(); ++k )
    {
      auto& pair = report.pairs[k];
      pair.distinguishable = report.CS( 0, k );
      if ( options.witnesses && pair.distinguishable )
      {
        pair.witness = find_distinguishing_witness( form, pair.z, pair.x );
      }
    }
  }
  else
  {
    const auto dist = distances_to_xi( ext, report.partition );
    for ( std::size_t k = 0; k < theta.size(); ++k )
    {
      auto& pair = report.pairs[k];
      pair.distinguishable = dist[theta[k]] != unreached;
      report.CS.set( 0, k, pair.distinguishable );
      if ( options.witnesses && pair.distinguishable )
      {
        pair.witness = follow_distances( ext, dist, theta[k] );
      }
    }
  }
  report.observable = report.CS.all_ones();
  return report;
}

std::optional<distinguishing_witness> find_distinguishing_witness( const algebraic_form& form, std::uint64_t z0,
                                                                   std::uint64_t x0 )
{
  check_pair_space( form.n );
  const auto start = pair_index( z0, x0, form.n );
  if ( z0 == x0 )
  {
    throw std::invalid_argument( "find_distinguishing_witness: the two initial states coincide" );
  }
  const auto states = form.state_count();
  auto differs = [&]( std::uint64_t w ) {
    const auto [z, x] = pair_states( w, form.n );
    return form.H[z] != form.H[x];
  };
  if ( differs( start ) )
  {
    return distinguishing_witness{};
  }

  struct step
  {
    std::uint64_t parent;
    std::uint32_t control;
  };
  std::unordered_map<std::uint64_t, step> visited{ { start, { start, 0 } } };
  std::deque<std::uint64_t> queue{ start };
  while ( !queue.empty() )
  {
    const auto w = queue.front();
    queue.pop_front();
    const auto [z, x] = pair_states( w, form.n );
    for ( std::size_t j = 0; j < form.control_count(); ++j )
    {
      const auto next = form.successor( j, z ) * states + form.successor( j, x );
      if ( !visited.try_emplace( next, step{ w, static_cast<std::uint32_t>( j ) } ).second )
      {
        continue;
      }
      if ( differs( next ) )
      {
        distinguishing_witness witness;
        for ( auto at = next; at != start; at = visited.at( at ).parent )
        {
          witness.controls.insert( witness.controls.begin(), visited.at( at ).control );
        }
        witness.T = witness.controls.size();
        return witness;
      }
      queue.push_back( next );
    }
  }
  return std::nullopt;
}

} // namespace bcn
