#include <bcn/observe.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace bcn;

namespace
{

algebraic_form lac_case1()
{
  return with_output_matrix( compile_network( parse_network( test::lac_source ) ), test::lac_reference_H3() );
}

algebraic_form lac_case2() { return compile_network( parse_network( test::lac_source ) ); }

std::vector<std::uint64_t> one_based( std::vector<std::uint64_t> v )
{
  for ( auto& x : v )
  {
    ++x;
  }
  return v;
}

// Plays the witness on both states and checks the outputs agree before T and differ at T.
bool replays( const algebraic_form& form, std::uint64_t z, std::uint64_t x, const distinguishing_witness& w )
{
  if ( w.controls.size() != w.T )
  {
    return false;
  }
  for ( std::size_t t = 0; t < w.T; ++t )
  {
    if ( form.H[z] != form.H[x] )
    {
      return false;
    }
    z = form.successor( w.controls[t], z );
    x = form.successor( w.controls[t], x );
  }
  return form.H[z] != form.H[x];
}

} // namespace

TEST_SUITE( "observe" )
{

TEST_CASE( "pair indexing" )
{
  CHECK( pair_index( 1, 3, 3 ) + 1 == 12 );
  CHECK( pair_index( 5, 7, 3 ) + 1 == 48 );
  CHECK( pair_states( 47, 3 ) == std::pair<std::uint64_t, std::uint64_t>{ 5, 7 } );
  CHECK_THROWS_AS( pair_index( 8, 0, 3 ), std::out_of_range );
  for ( std::uint64_t w = 0; w < 64; ++w )
  {
    const auto [z, x] = pair_states( w, 3 );
    CHECK( pair_index( z, x, 3 ) == w );
  }
}

TEST_CASE( "pair partitions of the lac operon" )
{
  const auto case2 = partition_pairs( test::lac_reference_H2(), 3 );
  CHECK( one_based( case2.theta ) == std::vector<std::uint64_t>{ 2, 20, 38, 56 } );
  CHECK( case2.xi_count == 64 - 8 - 8 );

  const auto case1 = partition_pairs( test::lac_reference_H3(), 3 );
  CHECK( one_based( case1.theta ) == std::vector<std::uint64_t>{ 12, 14, 16, 30, 32, 48 } );
  CHECK( case1.xi_count == 64 - 8 - 12 );
  CHECK( case1.is_theta( pair_index( 3, 1, 3 ) ) );
  CHECK( case1.is_diagonal( pair_index( 2, 2, 3 ) ) );
  CHECK_FALSE( case1.is_xi( pair_index( 2, 2, 3 ) ) );

  const auto injective = partition_pairs( logical_matrix::identity( 8 ), 3 );
  CHECK( injective.theta.empty() );
  CHECK( injective.xi_count == 56 );
}

TEST_CASE( "partition counts and symmetry on random outputs" )
{
  std::mt19937_64 rng( test::default_seed + 21 );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const auto n = test::random_dim( rng, 1, 4 );
    const auto h = test::random_logical( rng, std::size_t{ 1 } << test::random_dim( rng, 0, 2 ), std::size_t{ 1 } << n );
    const auto part = partition_pairs( h, n );
    const auto states = std::size_t{ 1 } << n;
    CHECK( states + 2 * part.theta.size() + part.xi_count == part.pair_count() );
    for ( std::uint64_t w = 0; w < part.pair_count(); ++w )
    {
      const auto [z, x] = pair_states( w, n );
      const auto flipped = pair_index( x, z, n );
      CHECK( part.is_xi( w ) == part.is_xi( flipped ) );
      CHECK( part.is_xi( w ) == ( h[z] != h[x] ) );
      CHECK( part.is_diagonal( w ) + part.is_xi( w ) + part.is_theta( w ) == 1 );
    }
  }
}

TEST_CASE( "extended system" )
{
  const auto ext = build_extended_system( lac_case2() );
  CHECK( ext.per_control.size() == 8 );
  CHECK( ext.successor( 4, pair_index( 1, 3, 3 ) ) == pair_index( 0, 4, 3 ) );

  const auto flip = build_extended_system( compile_network( parse_network( "network f\nstates: x1\nx1' = !x1\n" ) ) );
  CHECK( flip.successor( 0, pair_index( 0, 1, 1 ) ) == pair_index( 1, 0, 1 ) );
  CHECK( flip.one_step_dense().count() == 4 );
}

TEST_CASE( "diagonal pairs stay on the diagonal" )
{
  std::mt19937_64 rng( test::default_seed + 22 );
  for ( int trial = 0; trial < 20; ++trial )
  {
    const auto form = compile_network(
        test::random_model( rng, test::random_dim( rng, 1, 4 ), test::random_dim( rng, 0, 2 ), 1 ) );
    const auto ext = build_extended_system( form );
    for ( std::size_t j = 0; j < form.control_count(); ++j )
    {
      for ( std::uint64_t a = 0; a < form.state_count(); ++a )
      {
        const auto next = a * form.state_count() + a;
        const auto [z, x] = pair_states( ext.successor( j, next ), form.n );
        CHECK( z == x );
        CHECK( z == form.successor( j, a ) );
      }
    }
  }
}

TEST_CASE( "observability setup" )
{
  const auto part = partition_pairs( test::lac_reference_H2(), 3 );
  const auto sets = observability_setup( part );
  REQUIRE( sets.initial.size() == 4 );
  CHECK( sets.initial.sets[1].members == std::vector<std::uint64_t>{ 19 } );
  REQUIRE( sets.destination.size() == 1 );
  CHECK( sets.destination.sets[0].members == part.xi_members() );
  CHECK( index_matrix( sets.initial ).cols() == 4 );
}

TEST_CASE( "observability of the lac operon" )
{
  for ( auto engine : { observability_engine::bfs, observability_engine::dense } )
  {
    const auto case1 = observability_verdict( lac_case1(), { engine, true } );
    CHECK( case1.observable );
    CHECK( case1.CS == boolean_matrix::ones( 1, 6 ) );
    for ( const auto& p : case1.pairs )
    {
      REQUIRE( p.witness );
      CHECK( *p.witness == distinguishing_witness{ { 4 }, 1 } );
    }

    const auto case2 = observability_verdict( lac_case2(), { engine, true } );
    CHECK_FALSE( case2.observable );
    CHECK( case2.CS == boolean_matrix::from_rows( { { 0, 1, 0, 1 } } ) );
    CHECK( case2.pairs[1].z == 2 );
    CHECK( case2.pairs[1].x == 3 );
    REQUIRE( case2.pairs[1].witness );
    CHECK( *case2.pairs[1].witness == distinguishing_witness{ { 4 }, 1 } );
    CHECK_FALSE( case2.pairs[0].witness );
  }
}

TEST_CASE( "forward witness search" )
{
  const auto form = lac_case2();
  CHECK( find_distinguishing_witness( form, 2, 3 ) == distinguishing_witness{ { 4 }, 1 } );
  CHECK_FALSE( find_distinguishing_witness( form, 0, 1 ) );
  CHECK( find_distinguishing_witness( form, 0, 7 ) == distinguishing_witness{ {}, 0 } );
  CHECK_THROWS( find_distinguishing_witness( form, 3, 3 ) );
}

TEST_CASE( "degenerate observability inputs" )
{
  const auto flip = compile_network( parse_network( "network f\nstates: x1\nx1' = !x1\n" ) );
  CHECK_THROWS_AS( observability_verdict( flip ), std::invalid_argument );

  const auto seen = compile_network( parse_network( "network s\nstates: x1\noutputs: y\nx1' = x1\ny = x1\n" ) );
  const auto report = observability_verdict( seen );
  CHECK( report.observable );
  CHECK( report.pairs.empty() );
}

TEST_CASE( "engines, orientations and witnesses agree on random networks" )
{
  std::mt19937_64 rng( test::default_seed + 23 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const auto n = test::random_dim( rng, 1, 4 );
    const auto form = compile_network( test::random_model( rng, n, test::random_dim( rng, 0, 2 ), test::random_dim( rng, 1, 2 ) ) );
    const auto bfs = observability_verdict( form, { observability_engine::bfs, true } );
    const auto dense = observability_verdict( form, { observability_engine::dense, false } );
    CHECK( bfs.CS == dense.CS );
    CHECK( bfs.observable == dense.observable );
    REQUIRE( bfs.pairs.size() == dense.pairs.size() );
    for ( std::size_t k = 0; k < bfs.pairs.size(); ++k )
    {
      const auto& p = bfs.pairs[k];
      CHECK( p.distinguishable == dense.pairs[k].distinguishable );
      CHECK( p.witness.has_value() == p.distinguishable );
      const auto forward = find_distinguishing_witness( form, p.z, p.x );
      const auto reverse = find_distinguishing_witness( form, p.x, p.z );
      CHECK( forward == p.witness );
      CHECK( reverse == p.witness );
      if ( p.witness )
      {
        CHECK( p.witness->T >= 1 );
        CHECK( replays( form, p.z, p.x, *p.witness ) );
      }
    }
  }
}

}
