#pragma once

#include <bcn/boolmat.hpp>
#include <bcn/compiler.hpp>
#include <bcn/reach.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bcn
{

/// Largest n for which the pair space 2^(2n) is materialised.
inline constexpr std::size_t max_pair_state_bits = 26;
/// Largest m + 2n for which the extended transition maps are materialised.
inline constexpr std::size_t max_extended_entry_bits = 28;
/// Largest 2n for which the dense cross-check engine is available.
inline constexpr std::size_t max_dense_pair_bits = 12;

/// Index of the pair state w = z ⋉ x: z · 2^n + x (0-based). Throws std::out_of_range.
std::uint64_t pair_index( std::uint64_t z, std::uint64_t x, std::size_t n );
/// Inverse of pair_index.
std::pair<std::uint64_t, std::uint64_t> pair_states( std::uint64_t w, std::size_t n );

/*! \brief Split of the pair space into the diagonal D, the output-equal
 * off-diagonal pairs Θ and the output-distinguishable pairs Ξ.
 *
 * Θ is kept as representatives z < x in ascending pair index. Ξ holds both
 * orientations.
 */
struct pair_partition
{
  std::size_t n = 0;
  std::vector<std::uint64_t> theta;
  std::vector<bool> xi;
  std::size_t xi_count = 0;

  std::size_t pair_count() const noexcept { return std::size_t{ 1 } << ( 2 * n ); }
  bool is_diagonal( std::uint64_t w ) const;
  bool is_xi( std::uint64_t w ) const { return xi[w]; }
  /// True for both orientations of every Θ pair.
  bool is_theta( std::uint64_t w ) const { return !is_diagonal( w ) && !is_xi( w ); }
  std::vector<std::uint64_t> xi_members() const;
};

pair_partition partition_pairs( const logical_matrix& h, std::size_t n );

/// Pair dynamics w(t+1) = M_j w(t): both coordinates driven by the same control j.
struct extended_system
{
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<logical_matrix> per_control;

  std::size_t pair_count() const noexcept { return std::size_t{ 1 } << ( 2 * n ); }
  std::uint64_t successor( std::size_t control, std::uint64_t w ) const { return per_control[control][w]; }
  /// OR of all per-control matrices, as a dense matrix. Requires 2n <= max_dense_pair_bits.
  boolean_matrix one_step_dense() const;
};

/// Built by direct enumeration over (control, z, x). Throws size_limit_error beyond the ceilings above.
extended_system build_extended_system( const algebraic_form& form );

/// Initial family: one singleton per Θ representative. Destination family: the single set Ξ.
struct observability_sets
{
  set_family initial;
  set_family destination;
};

observability_sets observability_setup( const pair_partition& partition );

/// A control sequence (0-based control indices) after which the outputs first differ, at time T.
struct distinguishing_witness
{
  std::vector<std::uint32_t> controls;
  std::size_t T = 0;

  friend bool operator==( const distinguishing_witness&, const distinguishing_witness& ) = default;
};

enum class observability_engine
{
  bfs,
  dense
};

struct observability_options
{
  observability_engine engine = observability_engine::bfs;
  bool witnesses = false;
};

struct pair_verdict
{
  std::uint64_t z = 0;
  std::uint64_t x = 0;
  bool distinguishable = false;
  std::optional<distinguishing_witness> witness;
};

struct observability_report
{
  bool observable = false;
  pair_partition partition;
  std::vector<pair_verdict> pairs; ///< one per Θ representative, in order
  boolean_matrix CS;               ///< 1 × |Θ|
};

/*! \brief Decides observability through set controllability of the pair system.
 *
 * The network is observable iff every Θ pair can be driven into Ξ. The bfs
 * engine runs one backward breadth-first search from Ξ over the pair graph;
 * the dense engine evaluates J_dᵀ ×_B C ×_B J_0 on the extended system.
 * Witnesses are shortest, with ties broken by the smallest control index at
 * each step. Throws std::invalid_argument when the network has no outputs.
 */
observability_report observability_verdict( const algebraic_form& form, const observability_options& options = {} );

/// Shortest distinguishing control sequence for z0 != x0 by forward search, or nullopt if none exists.
std::optional<distinguishing_witness> find_distinguishing_witness( const algebraic_form& form, std::uint64_t z0,
                                                                   std::uint64_t x0 );

} // namespace bcn
