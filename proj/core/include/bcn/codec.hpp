#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bcn
{

/*! \brief Vector-form state codec.
 *
 * A Boolean tuple (b1, ..., bk) maps to the basis vector δ_{2^k}^{i+1} of the
 * Kronecker product of its coordinates, with 1 ~ δ_2^1 and 0 ~ δ_2^2. The
 * returned index i is 0-based: i = Σ (1 - b_j) · 2^(k-j), so b1 is the most
 * significant digit and the all-true tuple is index 0.
 */
std::uint64_t encode_state( const std::vector<bool>& bits );

/// Inverse of encode_state. Throws std::out_of_range unless index < 2^k.
std::vector<bool> decode_state( std::uint64_t index, std::size_t k );

/// b_j (0-based j) of the tuple encoded by `index` with k coordinates.
inline bool state_bit( std::uint64_t index, std::size_t k, std::size_t j ) noexcept
{
  return ( ( index >> ( k - 1 - j ) ) & 1u ) == 0;
}

} // namespace bcn
