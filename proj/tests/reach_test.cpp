#include <bcn/reach.hpp>
#include <bcn/set_spec.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace bcn;

namespace
{

algebraic_form toy_form() { return compile_network( parse_network( test::toy_source ) ); }

set_family family_of( std::size_t universe, std::vector<std::vector<std::uint64_t>> one_based )
{
  set_family f{ universe, {}, {} };
  for ( auto& members : one_based )
  {
    for ( auto& s : members )
    {
      --s;
    }
    f.add( state_set::of( universe, std::move( members ) ) );
  }
  return f;
}

boolean_matrix literal_closure( const boolean_matrix& m )
{
  auto sum = m;
  for ( std::size_t i = 2; i <= m.rows(); ++i )
  {
    sum = bool_add( sum, bool_power( m, i ) );
  }
  return sum;
}

} // namespace

TEST_SUITE( "reach" )
{

TEST_CASE( "one-step matrix" )
{
  const auto m = one_step_matrix( toy_form() );
  CHECK( m.column_support( 0 ) == std::vector<std::size_t>{ 1 } );
  CHECK( m.column_support( 1 ) == std::vector<std::size_t>{ 1, 3 } );
  CHECK( m.column_support( 2 ) == std::vector<std::size_t>{ 0, 1, 2, 3 } );
  CHECK( m.column_support( 3 ) == std::vector<std::size_t>{ 0, 1 } );

  CHECK( one_step_matrix( compile_network( parse_network( "network s\nstates: x1\nx1' = x1\n" ) ) ) ==
         boolean_matrix::identity( 2 ) );
  CHECK( one_step_matrix( compile_network( parse_network( "network s\nstates: x1\ninputs: u1\nx1' = u1\n" ) ) )
             .all_ones() );
}

TEST_CASE( "controllability matrix" )
{
  const auto c = controllability_matrix( one_step_matrix( toy_form() ) );
  CHECK( c == test::toy_reference_C() );

  CHECK( controllability_matrix( boolean_matrix::identity( 4 ) ) == boolean_matrix::identity( 4 ) );
  const auto single = boolean_matrix::from_rows( { { 0, 0 }, { 1, 0 } } );
  CHECK( controllability_matrix( single ) == single );
  CHECK_THROWS_AS( controllability_matrix( boolean_matrix::zeros( 2, 3 ) ), shape_error );
}

TEST_CASE( "fixpoint closure equals the literal sum of powers" )
{
  std::mt19937_64 rng( test::default_seed + 11 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const auto size = test::random_dim( rng, 1, 64 );
    const double density = std::uniform_real_distribution<double>( 0.0, 3.0 / static_cast<double>( size ) )( rng );
    const auto m = test::random_boolean( rng, size, size, density );
    const auto c = controllability_matrix( m );
    CHECK( c == literal_closure( m ) );
    // fixpoint invariants: M <= C and C = C + M C
    CHECK( bool_add( m, c ) == c );
    CHECK( bool_add( c, bool_product( m, c ) ) == c );
  }
}

TEST_CASE( "controllability verdicts" )
{
  const auto report = controllability_verdicts( test::toy_reference_C() );
  CHECK_FALSE( report.controllable );
  CHECK( report.controllable_at == std::vector<bool>{ false, false, true, false } );
  CHECK( report.reachable( 0, 2 ) );
  CHECK_FALSE( report.reachable( 2, 0 ) );

  CHECK( controllability_verdicts( boolean_matrix::ones( 4, 4 ) ).controllable );
  const auto id = controllability_verdicts( boolean_matrix::identity( 4 ) );
  CHECK_FALSE( id.controllable );
  CHECK( id.controllable_at == std::vector<bool>( 4, false ) );
  CHECK( controllability_verdicts( boolean_matrix::identity( 1 ) ).controllable );
}

TEST_CASE( "index matrices" )
{
  CHECK( index_matrix( family_of( 4, { { 1 }, { 2, 3, 4 } } ) ) ==
         boolean_matrix::from_rows( { { 1, 0 }, { 0, 1 }, { 0, 1 }, { 0, 1 } } ) );
  CHECK( index_matrix( family_of( 4, { { 3 } } ) ) == boolean_matrix::from_rows( { { 0 }, { 0 }, { 1 }, { 0 } } ) );
  CHECK( index_matrix( finest_partition( 5 ) ) == boolean_matrix::identity( 5 ) );
  CHECK_THROWS( index_matrix( set_family{ 4, {}, {} } ) );
}

TEST_CASE( "set controllability of the two-node network" )
{
  const auto c = controllability_matrix( one_step_matrix( toy_form() ) );

  const auto feasible = set_controllability_verdicts( set_controllability_matrix(
      c, index_matrix( family_of( 4, { { 1 }, { 2, 3, 4 } } ) ), index_matrix( family_of( 4, { { 1, 2 }, { 3, 4 } } ) ) ) );
  CHECK( feasible.CS == boolean_matrix::ones( 2, 2 ) );
  CHECK( feasible.controllable );

  const auto infeasible = set_controllability_verdicts( set_controllability_matrix(
      c, index_matrix( family_of( 4, { { 1, 2, 3 }, { 1, 4 } } ) ), index_matrix( family_of( 4, { { 3 } } ) ) ) );
  CHECK( infeasible.CS == boolean_matrix::from_rows( { { 1, 0 } } ) );
  CHECK_FALSE( infeasible.controllable );
  CHECK( infeasible.controllable_at == std::vector<bool>{ true, false } );

  const auto id = boolean_matrix::identity( 4 );
  CHECK( set_controllability_matrix( c, id, id ) == c );

  CHECK_THROWS_AS( set_controllability_matrix( c, boolean_matrix::zeros( 3, 1 ), id ), shape_error );
}

TEST_CASE( "set verdict edge cases" )
{
  CHECK( set_controllability_verdicts( boolean_matrix::ones( 3, 2 ) ).controllable );
  const auto none = set_controllability_verdicts( boolean_matrix::zeros( 2, 2 ) );
  CHECK_FALSE( none.controllable );
  CHECK( none.controllable_at == std::vector<bool>{ false, false } );
}

TEST_CASE( "set controllability properties" )
{
  std::mt19937_64 rng( test::default_seed + 12 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const auto size = test::random_dim( rng, 2, 32 );
    const auto c = controllability_matrix( test::random_boolean( rng, size, size, 1.5 / static_cast<double>( size ) ) );
    const auto j0 = test::random_boolean( rng, size, test::random_dim( rng, 1, 5 ), 0.2 );
    const auto jd = test::random_boolean( rng, size, test::random_dim( rng, 1, 5 ), 0.2 );
    const auto cs = set_controllability_matrix( c, j0, jd );

    // monotone in the sets
    const auto cs_grown = set_controllability_matrix( c, bool_add( j0, test::random_boolean( rng, size, j0.cols(), 0.2 ) ),
                                                      bool_add( jd, test::random_boolean( rng, size, jd.cols(), 0.2 ) ) );
    CHECK( bool_add( cs, cs_grown ) == cs_grown );

    // singleton families select a submatrix of C
    const auto a = test::random_dim( rng, 0, size - 1 ), b = test::random_dim( rng, 0, size - 1 );
    const auto single = set_controllability_matrix( c, index_matrix( family_of( size, { { a + 1 } } ) ),
                                                    index_matrix( family_of( size, { { b + 1 } } ) ) );
    CHECK( single( 0, 0 ) == c( b, a ) );
  }
}

TEST_CASE( "output partitions" )
{
  const auto toy = output_partition( logical_matrix::delta( 2, { 1, 2, 2, 2 } ) );
  REQUIRE( toy.size() == 2 );
  CHECK( toy.sets[0].members == std::vector<std::uint64_t>{ 0 } );
  CHECK( toy.sets[1].members == std::vector<std::uint64_t>{ 1, 2, 3 } );

  const auto lac = output_partition( test::lac_reference_H2() );
  REQUIRE( lac.size() == 4 );
  CHECK( lac.sets[2].members == std::vector<std::uint64_t>{ 4, 5 } );

  const auto id = output_partition( logical_matrix::identity( 4 ) );
  CHECK( index_matrix( id ) == boolean_matrix::identity( 4 ) );

  const auto gaps = logical_matrix::delta( 4, { 1, 1, 3, 3 } );
  CHECK( output_partition( gaps ).size() == 4 );
  CHECK( output_partition( gaps ).sets[1].members.empty() );
  CHECK( output_partition( gaps, true ).size() == 2 );
}

TEST_CASE( "output controllability" )
{
  const auto form = toy_form();
  const auto c = controllability_matrix( one_step_matrix( form ) );
  const auto report = output_controllability( form, c );
  CHECK( report.CY == boolean_matrix::ones( 2, 4 ) );
  CHECK( report.controllable );
  // H = J_dᵀ for the output-based partition
  CHECK( report.CY == set_controllability_matrix( c, boolean_matrix::identity( 4 ), index_matrix( output_partition( form.H ) ) ) );

  const auto constant = output_controllability_matrix( c, logical_matrix::delta( 2, { 1, 1, 1, 1 } ) );
  CHECK( constant.row_support( 1 ).empty() );
  CHECK_FALSE( constant.all_ones() );

  const auto id = output_controllability_matrix( boolean_matrix::identity( 4 ), logical_matrix::identity( 4 ) );
  CHECK( id == boolean_matrix::identity( 4 ) );

  const auto flip = compile_network( parse_network( "network f\nstates: x1\nx1' = !x1\n" ) );
  CHECK_THROWS( output_controllability( flip, controllability_matrix( one_step_matrix( flip ) ) ) );
}

TEST_CASE( "set specification files" )
{
  const auto spec = parse_set_spec( R"({
    "initial": [{"name": "s1", "states": ["11", "10", "01"]}, {"name": "s2", "states": [1, 4]}],
    "destination": [{"name": "d1", "states": ["01"]}, {"name": "d2", "states": [3]}]
  })", 2 );
  CHECK( spec.initial.size() == 2 );
  CHECK( spec.initial.sets[0].members == std::vector<std::uint64_t>{ 0, 1, 2 } );
  CHECK( spec.initial.names[1] == "s2" );
  CHECK( spec.destination.sets[0] == spec.destination.sets[1] );
  REQUIRE( spec.warnings.size() == 1 );
  CHECK( spec.warnings[0] == "destination: sets 'd1' and 'd2' are identical" );

  CHECK_THROWS_AS( parse_set_spec( "{", 2 ), format_error );
  CHECK_THROWS_AS( parse_set_spec( R"({"initial": []})", 2 ), format_error );
  CHECK_THROWS_AS( parse_set_spec( R"({"initial":[{"states":[5]}],"destination":[{"states":[1]}]})", 2 ), format_error );
  CHECK_THROWS_AS( parse_set_spec( R"({"initial":[{"states":["1"]}],"destination":[{"states":[1]}]})", 2 ), format_error );
  CHECK_THROWS_AS( parse_set_spec( R"({"initial":[{"states":[]}],"destination":[{"states":[1]}]})", 2 ), format_error );
  CHECK_THROWS_AS( parse_set_spec( R"({"initial":[{"states":[true]}],"destination":[{"states":[1]}]})", 2 ), format_error );
}

}
