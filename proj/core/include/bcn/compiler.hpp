#pragma once

#include <bcn/boolmat.hpp>
#include <bcn/codec.hpp>
#include <bcn/netlang.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bcn
{

/*! \brief Algebraic form x(t+1) = L ⋉ u(t) ⋉ x(t), y(t) = H ⋉ x(t).
 *
 * Column j·2^n + a of L is the successor of state a under control j. When the
 * network has no outputs, H is the 1 × 2^n matrix mapping every state to the
 * single trivial output and `trivial_output` is set.
 */
struct algebraic_form
{
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  logical_matrix L;
  logical_matrix H;
  bool trivial_output = false;

  std::size_t state_count() const noexcept { return std::size_t{ 1 } << n; }
  std::size_t control_count() const noexcept { return std::size_t{ 1 } << m; }
  std::size_t output_count() const noexcept { return H.rows(); }

  std::uint32_t successor( std::size_t control, std::size_t state ) const
  {
    return L[control * state_count() + state];
  }
  /// The 2^n × 2^n block L ⋉ δ_{2^m}^{control+1}.
  logical_matrix control_block( std::size_t control ) const;

  friend bool operator==( const algebraic_form&, const algebraic_form& ) = default;
};

struct compile_options
{
  /// Ceiling on n + m; dense analyses downstream scale with 2^(n+m).
  std::size_t max_variables = 20;
};

/*! \brief Structure matrix M_f ∈ L_{2×2^k} of `e` over the ordered `vars`.
 *
 * Column a is δ_2^1 when e holds at decode_state(a, k). Throws
 * evaluation_error when `e` mentions a name outside `vars`.
 */
logical_matrix structure_matrix( const expr& e, const std::vector<std::string>& vars );

/// Builds L and H by truth-table enumeration. Throws size_limit_error when n + m exceeds the ceiling.
algebraic_form compile_network( const network_model& model, const compile_options& options = {} );

/// Replaces H; `h` must have 2^n columns and a power-of-two row count.
algebraic_form with_output_matrix( algebraic_form form, logical_matrix h );

/// `n=<n> m=<m> p=<p>` then L and H in canonical text form, one per line.
std::string to_text( const algebraic_form& form );

} // namespace bcn
