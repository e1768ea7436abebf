#include <bcn/codec.hpp>

#include <stdexcept>
#include <string>

namespace bcn
{

std::uint64_t encode_state( const std::vector<bool>& bits )
{
  if ( bits.size() >= 64 )
  {
    throw std::out_of_range( "encode_state: too many coordinates" );
  }
  std::uint64_t index = 0;
  for ( bool b : bits )
  {
    index = ( index << 1 ) | ( b ? 0u : 1u );
  }
  return index;
}

std::vector<bool> decode_state( std::uint64_t index, std::size_t k )
{
  if ( k >= 64 || index >= ( std::uint64_t{ 1 } << k ) )
  {
    throw std::out_of_range( "decode_state: index " + std::to_string( index + 1 ) + " outside 1.." +
                             ( k >= 64 ? std::string( "2^" ) + std::to_string( k ) : std::to_string( std::uint64_t{ 1 } << k ) ) );
  }
  std::vector<bool> bits( k );
  for ( std::size_t j = 0; j < k; ++j )
  {
    bits[j] = state_bit( index, k, j );
  }
  return bits;
}

} // namespace bcn
