#include <bcn/observe.hpp>
#include <bcn/reach.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace bcn;

namespace
{

// Ring network: x_i' = x_{i-1} ^ (u1 & x_{i+1}), a single output on x1.
network_model ring( std::size_t n )
{
  std::string src = "network ring\nstates: ";
  for ( std::size_t i = 1; i <= n; ++i )
  {
    src += ( i == 1 ? "x" : ", x" ) + std::to_string( i );
  }
  src += "\ninputs: u1\noutputs: y1\n";
  for ( std::size_t i = 1; i <= n; ++i )
  {
    const auto prev = ( i + n - 2 ) % n + 1, next = i % n + 1;
    src += "x" + std::to_string( i ) + "' = x" + std::to_string( prev ) + " ^ (u1 & x" + std::to_string( next ) + ")\n";
  }
  src += "y1 = x1\n";
  return parse_network( src );
}

void bm_compile( benchmark::State& state )
{
  const auto model = ring( static_cast<std::size_t>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( compile_network( model ) );
  }
}
BENCHMARK( bm_compile )->DenseRange( 4, 16, 4 );

void bm_closure( benchmark::State& state )
{
  const auto size = static_cast<std::size_t>( state.range( 0 ) );
  std::mt19937_64 rng( 7 );
  std::bernoulli_distribution bit( 2.0 / static_cast<double>( size ) );
  boolean_matrix m( size, size );
  for ( std::size_t r = 0; r < size; ++r )
  {
    for ( std::size_t c = 0; c < size; ++c )
    {
      m.set( r, c, bit( rng ) );
    }
  }
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( controllability_matrix( m ) );
  }
}
BENCHMARK( bm_closure )->RangeMultiplier( 4 )->Range( 64, 4096 );

void bm_observability( benchmark::State& state )
{
  const auto form = compile_network( ring( static_cast<std::size_t>( state.range( 0 ) ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( observability_verdict( form ) );
  }
}
BENCHMARK( bm_observability )->DenseRange( 4, 10, 2 );

} // namespace
BENCHMARK_MAIN();
