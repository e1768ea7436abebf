#pragma once

#include <bcn/boolmat.hpp>
#include <bcn/compiler.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bcn
{

/// A subset of the state space {0, ..., universe-1}; members are sorted and distinct.
struct state_set
{
  std::size_t universe = 0;
  std::vector<std::uint64_t> members;

  /// Sorts and deduplicates; throws std::out_of_range for members >= universe.
  static state_set of( std::size_t universe, std::vector<std::uint64_t> members );

  bool contains( std::uint64_t state ) const;
  friend bool operator==( const state_set&, const state_set& ) = default;
};

/// An ordered family of state sets (the initial or destination sets). Order fixes the rows/columns of C_S.
struct set_family
{
  std::size_t universe = 0;
  std::vector<state_set> sets;
  std::vector<std::string> names; ///< optional labels, empty or aligned with `sets`

  std::size_t size() const noexcept { return sets.size(); }
  void add( state_set s, std::string name = {} );
};

/// Pairs (i, j), i < j, of identical sets in the family.
std::vector<std::pair<std::size_t, std::size_t>> duplicate_sets( const set_family& family );

/// One singleton per state, in state order.
set_family finest_partition( std::size_t universe );

/// M(i, a) = 1 iff some control moves state a to state i in one step.
boolean_matrix one_step_matrix( const algebraic_form& form );

/*! \brief Controllability matrix C = Σ_B M^(i), i = 1..rows(M).
 *
 * Computed as the least fixpoint of C = M + M ×_B C, sweeping rows in place
 * until nothing changes. C(i, j) = 1 iff state i is reachable from state j in
 * at least one step.
 */
boolean_matrix controllability_matrix( const boolean_matrix& m );

struct controllability_report
{
  boolean_matrix C;
  std::vector<bool> controllable_at; ///< per source state: column all ones
  bool controllable = false;

  bool reachable( std::size_t to, std::size_t from ) const { return C( to, from ); }
};

controllability_report controllability_verdicts( boolean_matrix c );

/// Column k is the indicator vector of family.sets[k]. Throws std::invalid_argument on an empty family.
boolean_matrix index_matrix( const set_family& family );

/// C_S = J_dᵀ ×_B C ×_B J_0, shape β × α.
boolean_matrix set_controllability_matrix( const boolean_matrix& c, const boolean_matrix& j0, const boolean_matrix& jd );

struct set_controllability_report
{
  boolean_matrix CS;
  std::vector<bool> controllable_at; ///< per initial set: column all ones
  bool controllable = false;

  /// Set controllable from initial set `from` to destination set `to`.
  bool reachable( std::size_t to, std::size_t from ) const { return CS( to, from ); }
};

set_controllability_report set_controllability_verdicts( boolean_matrix cs );

/// Set j holds the states whose output is j. Empty classes are kept unless `drop_empty`.
set_family output_partition( const logical_matrix& h, bool drop_empty = false );

/// C_Y = H ×_B C, shape 2^p × 2^n.
boolean_matrix output_controllability_matrix( const boolean_matrix& c, const logical_matrix& h );

struct output_controllability_report
{
  boolean_matrix CY;
  bool controllable = false;
};

/// Throws std::invalid_argument when the network has no outputs.
output_controllability_report output_controllability( const algebraic_form& form, const boolean_matrix& c );

} // namespace bcn
