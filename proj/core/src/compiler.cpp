#include <bcn/compiler.hpp>

#include <algorithm>
#include <bit>

namespace bcn
{

namespace
{

using table = std::vector<std::uint64_t>;

constexpr std::size_t max_table_vars = 30;

std::size_t table_words( std::size_t k )
{
  return k < 6 ? 1 : std::size_t{ 1 } << ( k - 6 );
}

std::uint64_t table_mask( std::size_t k )
{
  return k < 6 ? ( std::uint64_t{ 1 } << ( std::size_t{ 1 } << k ) ) - 1 : ~std::uint64_t{ 0 };
}

// Truth table of coordinate q among k: bit c is set iff state_bit(c, k, q).
table variable_table( std::size_t q, std::size_t k )
{
  table t( table_words( k ), 0 );
  const auto shift = k - 1 - q;
  if ( shift < 6 )
  {
    std::uint64_t pattern = 0;
    for ( std::size_t c = 0; c < 64; ++c )
    {
      if ( ( ( c >> shift ) & 1u ) == 0 )
      {
        pattern |= std::uint64_t{ 1 } << c;
      }
    }
    std::fill( t.begin(), t.end(), pattern & table_mask( k ) );
  }
  else
  {
    const auto period = std::size_t{ 1 } << ( shift - 6 );
    for ( std::size_t w = 0; w < t.size(); ++w )
    {
      t[w] = ( ( w / period ) & 1u ) == 0 ? ~std::uint64_t{ 0 } : 0;
    }
  }
  return t;
}

class table_builder
{
public:
  table_builder( const std::vector<std::string>& vars ) : vars_( vars ), k_( vars.size() )
  {
    if ( k_ > max_table_vars )
    {
      throw size_limit_error( "truth table over " + std::to_string( k_ ) + " variables is too large" );
    }
  }

  table build( const expr& e ) const
  {
    switch ( e.kind() )
    {
    case expr_kind::constant:
      return table( table_words( k_ ), e.value() ? table_mask( k_ ) : 0 );
    case expr_kind::variable:
    {
      const auto it = std::find( vars_.begin(), vars_.end(), e.name() );
      if ( it == vars_.end() )
      {
        throw evaluation_error( "unbound variable '" + e.name() + "'" );
      }
      return variable_table( static_cast<std::size_t>( it - vars_.begin() ), k_ );
    }
    case expr_kind::negation:
    {
      auto t = build( e.operand() );
      for ( auto& w : t )
      {
        w = ~w & table_mask( k_ );
      }
      return t;
    }
    default:
      break;
    }
    auto lhs = build( e.lhs() );
    const auto rhs = build( e.rhs() );
    const auto mask = table_mask( k_ );
    for ( std::size_t w = 0; w < lhs.size(); ++w )
    {
      const auto a = lhs[w], b = rhs[w];
      switch ( e.kind() )
      {
      case expr_kind::conjunction:
        lhs[w] = a & b;
        break;
      case expr_kind::exclusive_or:
        lhs[w] = a ^ b;
        break;
      case expr_kind::disjunction:
        lhs[w] = a | b;
        break;
      case expr_kind::implication:
        lhs[w] = ( ~a | b ) & mask;
        break;
      case expr_kind::equivalence:
        lhs[w] = ~( a ^ b ) & mask;
        break;
      default:
        break;
      }
    }
    return lhs;
  }

private:
  const std::vector<std::string>& vars_;
  std::size_t k_;
};

bool table_bit( const table& t, std::size_t c )
{
  return ( t[c / 64] >> ( c % 64 ) ) & 1u;
}

// Column c of the result is encode_state(f_1(c), ..., f_r(c)).
logical_matrix stack_tables( const std::vector<table>& tables, std::size_t k )
{
  const auto cols = std::size_t{ 1 } << k;
  const auto r = tables.size();
  std::vector<logical_matrix::index_type> out( cols, 0 );
  for ( std::size_t c = 0; c < cols; ++c )
  {
    logical_matrix::index_type index = 0;
    for ( const auto& t : tables )
    {
      index = ( index << 1 ) | ( table_bit( t, c ) ? 0u : 1u );
    }
    out[c] = index;
  }
  return { std::size_t{ 1 } << r, std::move( out ) };
}

} // namespace

logical_matrix algebraic_form::control_block( std::size_t control ) const
{
  const auto cols = L.columns().subspan( control * state_count(), state_count() );
  return { state_count(), { cols.begin(), cols.end() } };
}

logical_matrix structure_matrix( const expr& e, const std::vector<std::string>& vars )
{
  const table_builder builder( vars );
  return stack_tables( { builder.build( e ) }, vars.size() );
}

algebraic_form compile_network( const network_model& model, const compile_options& options )
{
  if ( model.n() == 0 )
  {
    throw std::invalid_argument( "compile_network: network has no states" );
  }
  if ( model.n() + model.m() > options.max_variables )
  {
    throw size_limit_error( "network '" + model.name + "' has n+m = " + std::to_string( model.n() + model.m() ) +
                            " variables; the limit is " + std::to_string( options.max_variables ) );
  }
  if ( model.p() > 30 )
  {
    throw size_limit_error( "network '" + model.name + "' has too many outputs" );
  }

  // u ⋉ x: controls are the more significant coordinates.
  std::vector<std::string> joint = model.inputs;
  joint.insert( joint.end(), model.states.begin(), model.states.end() );

  algebraic_form form;
  form.n = model.n();
  form.m = model.m();
  form.p = model.p();

  {
    const table_builder builder( joint );
    std::vector<table> updates;
    updates.reserve( model.n() );
    for ( const auto& f : model.updates )
    {
      updates.push_back( builder.build( f ) );
    }
    form.L = stack_tables( updates, joint.size() );
  }
  {
    const table_builder builder( model.states );
    std::vector<table> maps;
    for ( const auto& h : model.output_maps )
    {
      maps.push_back( builder.build( h ) );
    }
    form.H = stack_tables( maps, model.n() );
    form.trivial_output = model.p() == 0;
  }
  return form;
}

algebraic_form with_output_matrix( algebraic_form form, logical_matrix h )
{
  if ( h.cols() != form.state_count() )
  {
    throw shape_error( "output matrix has " + std::to_string( h.cols() ) + " columns; expected " +
                       std::to_string( form.state_count() ) );
  }
  if ( !std::has_single_bit( h.rows() ) )
  {
    throw shape_error( "output matrix row count " + std::to_string( h.rows() ) + " is not a power of two" );
  }
  form.p = static_cast<std::size_t>( std::countr_zero( h.rows() ) );
  form.H = std::move( h );
  form.trivial_output = form.p == 0;
  return form;
}

std::string to_text( const algebraic_form& form )
{
  return "n=" + std::to_string( form.n ) + " m=" + std::to_string( form.m ) + " p=" + std::to_string( form.p ) +
         "\n" + to_text( form.L ) + "\n" + to_text( form.H ) + "\n";
}

} // namespace bcn
