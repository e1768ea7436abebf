#pragma once

#include <bcn/boolmat.hpp>

#include <string_view>

namespace bcn::test
{

// x1' = (x1 <-> x2) | u1, x2' = !x1 & u2, y = x1 & x2
inline constexpr std::string_view toy_source = R"(network toy
states: x1, x2
inputs: u1, u2
outputs: y1

x1' = (x1 <-> x2) | u1
x2' = !x1 & u2
y1 = x1 & x2
)";

// lac operon with measured outputs y1 = x1, y2 = x2
inline constexpr std::string_view lac_source = R"(network lac_operon
states: x1, x2, x3
inputs: u1, u2, u3
outputs: y1, y2

x1' = !u1 & (x2 | x3)
x2' = !u1 & u2 & x1
x3' = !u1 & (u2 | (u3 & x1))
y1 = x1
y2 = x2
)";

// Reference transition matrix of the lac operon, 1-based column indices.
inline logical_matrix lac_reference_L()
{
  return logical_matrix::delta( 8, { 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
                                     8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
                                     1, 1, 1, 5, 3, 3, 3, 7, 1, 1, 1, 5, 3, 3, 3, 7,
                                     3, 3, 3, 7, 4, 4, 4, 8, 4, 4, 4, 8, 4, 4, 4, 8 } );
}

inline logical_matrix lac_reference_H3() { return logical_matrix::delta( 8, { 8, 6, 3, 6, 5, 6, 7, 6 } ); }
inline logical_matrix lac_reference_H2() { return logical_matrix::delta( 4, { 1, 1, 2, 2, 3, 3, 4, 4 } ); }

inline boolean_matrix toy_reference_C()
{
  return boolean_matrix::from_rows( { { 1, 1, 1, 1 }, { 1, 1, 1, 1 }, { 0, 0, 1, 0 }, { 1, 1, 1, 1 } } );
}

} // namespace bcn::test
