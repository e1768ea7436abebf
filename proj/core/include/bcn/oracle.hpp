#pragma once

// Brute-force ground truth. Everything here simulates the network's
// expressions directly and uses none of the matrix algebra; only the state
// codec is shared with the algebraic path.

#include <bcn/boolmat.hpp>
#include <bcn/netlang.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bcn::oracle
{

inline constexpr std::size_t max_reach_variables = 12;
inline constexpr std::size_t max_pair_bits = 20;

/// One-step successors of each state over all controls, obtained by evaluating the update rules.
struct transition_graph
{
  std::size_t state_count = 0;
  std::vector<std::vector<std::uint64_t>> successors; ///< sorted, distinct
};

transition_graph build_transition_graph( const network_model& model );

/// Entry (i, j) is set iff a breadth-first search from j reaches i in one or more steps.
boolean_matrix reach_oracle( const network_model& model );

struct pair_flag
{
  std::uint64_t z = 0;
  std::uint64_t x = 0;
  bool distinguishable = false;

  friend bool operator==( const pair_flag&, const pair_flag& ) = default;
};

/// For every z < x with equal initial outputs: can one control sequence make the output sequences differ?
std::vector<pair_flag> distinguish_oracle( const network_model& model );

} // namespace bcn::oracle
