#include <bcn/boolmat.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace bcn
{

namespace
{

std::size_t checked_mul( std::size_t a, std::size_t b, const char* what )
{
  if ( a != 0 && b > max_dense_entries / a )
  {
    throw size_limit_error( std::string( what ) + ": dimension overflow" );
  }
  return a * b;
}

template<class Fn>
void for_each_set_bit( std::span<const boolean_matrix::word_type> words, Fn&& fn )
{
  for ( std::size_t w = 0; w < words.size(); ++w )
  {
    auto word = words[w];
    while ( word != 0 )
    {
      const auto bit = static_cast<std::size_t>( std::countr_zero( word ) );
      fn( w * boolean_matrix::word_bits + bit );
      word &= word - 1;
    }
  }
}

boolean_matrix::word_type tail_mask( std::size_t cols )
{
  const auto rem = cols % boolean_matrix::word_bits;
  return rem == 0 ? ~boolean_matrix::word_type{ 0 } : ( ( boolean_matrix::word_type{ 1 } << rem ) - 1 );
}

} // namespace

/* boolean_matrix */

boolean_matrix::boolean_matrix( std::size_t rows, std::size_t cols )
    : rows_( rows ), cols_( cols ), stride_( ( cols + word_bits - 1 ) / word_bits )
{
  const auto entries = checked_mul( rows, cols, "boolean_matrix" );
  if ( entries > max_dense_entries )
  {
    throw size_limit_error( "boolean_matrix: " + std::to_string( rows ) + "x" + std::to_string( cols ) +
                            " exceeds the dense size ceiling" );
  }
  bits_.assign( rows_ * stride_, 0 );
}

boolean_matrix boolean_matrix::ones( std::size_t rows, std::size_t cols )
{
  boolean_matrix m( rows, cols );
  if ( cols == 0 )
  {
    return m;
  }
  const auto mask = tail_mask( cols );
  for ( std::size_t r = 0; r < rows; ++r )
  {
    auto words = m.row_words( r );
    std::fill( words.begin(), words.end(), ~word_type{ 0 } );
    words.back() = mask;
  }
  return m;
}

boolean_matrix boolean_matrix::identity( std::size_t n )
{
  boolean_matrix m( n, n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    m.set( i, i );
  }
  return m;
}

boolean_matrix boolean_matrix::from_rows( std::initializer_list<std::initializer_list<int>> rows )
{
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  boolean_matrix m( rows.size(), cols );
  std::size_t r = 0;
  for ( const auto& row : rows )
  {
    if ( row.size() != cols )
    {
      throw shape_error( "boolean_matrix::from_rows: ragged rows" );
    }
    std::size_t c = 0;
    for ( int v : row )
    {
      m.set( r, c++, v != 0 );
    }
    ++r;
  }
  return m;
}

void boolean_matrix::set( std::size_t row, std::size_t col, bool value )
{
  auto& word = bits_[row * stride_ + col / word_bits];
  const auto mask = word_type{ 1 } << ( col % word_bits );
  word = value ? ( word | mask ) : ( word & ~mask );
}

bool boolean_matrix::or_row_from( std::size_t dst, const boolean_matrix& other, std::size_t src )
{
  auto to = row_words( dst );
  auto from = other.row_words( src );
  bool changed = false;
  for ( std::size_t w = 0; w < stride_; ++w )
  {
    const auto merged = to[w] | from[w];
    changed |= merged != to[w];
    to[w] = merged;
  }
  return changed;
}

bool boolean_matrix::all_ones() const
{
  for ( std::size_t r = 0; r < rows_; ++r )
  {
    if ( !row_all_ones( r ) )
    {
      return false;
    }
  }
  return true;
}

bool boolean_matrix::none() const
{
  return std::all_of( bits_.begin(), bits_.end(), []( word_type w ) { return w == 0; } );
}

bool boolean_matrix::row_all_ones( std::size_t row ) const
{
  if ( cols_ == 0 )
  {
    return true;
  }
  const auto words = row_words( row );
  for ( std::size_t w = 0; w + 1 < words.size(); ++w )
  {
    if ( words[w] != ~word_type{ 0 } )
    {
      return false;
    }
  }
  return words.back() == tail_mask( cols_ );
}

bool boolean_matrix::column_all_ones( std::size_t col ) const
{
  for ( std::size_t r = 0; r < rows_; ++r )
  {
    if ( !( *this )( r, col ) )
    {
      return false;
    }
  }
  return true;
}

std::size_t boolean_matrix::count() const
{
  std::size_t total = 0;
  for ( auto w : bits_ )
  {
    total += static_cast<std::size_t>( std::popcount( w ) );
  }
  return total;
}

std::vector<std::size_t> boolean_matrix::row_support( std::size_t row ) const
{
  std::vector<std::size_t> out;
  for_each_set_bit( row_words( row ), [&]( std::size_t c ) { out.push_back( c ); } );
  return out;
}

std::vector<std::size_t> boolean_matrix::column_support( std::size_t col ) const
{
  std::vector<std::size_t> out;
  for ( std::size_t r = 0; r < rows_; ++r )
  {
    if ( ( *this )( r, col ) )
    {
      out.push_back( r );
    }
  }
  return out;
}

/* logical_matrix */

logical_matrix::logical_matrix( std::size_t rows, std::vector<index_type> columns )
    : rows_( rows ), columns_( std::move( columns ) )
{
  if ( rows_ == 0 || rows_ > std::size_t{ 1 } << 31 )
  {
    throw shape_error( "logical_matrix: row count out of range" );
  }
  for ( auto c : columns_ )
  {
    if ( c >= rows_ )
    {
      throw shape_error( "logical_matrix: column index " + std::to_string( c + 1 ) + " exceeds row count " +
                         std::to_string( rows_ ) );
    }
  }
}

logical_matrix logical_matrix::delta( std::size_t rows, std::initializer_list<index_type> one_based )
{
  std::vector<index_type> cols;
  cols.reserve( one_based.size() );
  for ( auto c : one_based )
  {
    if ( c == 0 )
    {
      throw shape_error( "logical_matrix::delta: indices are 1-based" );
    }
    cols.push_back( c - 1 );
  }
  return { rows, std::move( cols ) };
}

logical_matrix logical_matrix::identity( std::size_t n )
{
  std::vector<index_type> cols( n );
  std::iota( cols.begin(), cols.end(), index_type{ 0 } );
  return { n, std::move( cols ) };
}

boolean_matrix logical_matrix::to_boolean() const
{
  boolean_matrix m( rows_, columns_.size() );
  for ( std::size_t k = 0; k < columns_.size(); ++k )
  {
    m.set( columns_[k], k );
  }
  return m;
}

std::optional<logical_matrix> logical_matrix::from_boolean( const boolean_matrix& m )
{
  if ( m.rows() == 0 )
  {
    return std::nullopt;
  }
  std::vector<index_type> cols( m.cols() );
  for ( std::size_t k = 0; k < m.cols(); ++k )
  {
    const auto support = m.column_support( k );
    if ( support.size() != 1 )
    {
      return std::nullopt;
    }
    cols[k] = static_cast<index_type>( support.front() );
  }
  return logical_matrix( m.rows(), std::move( cols ) );
}

/* operations */

boolean_matrix transpose( const boolean_matrix& a )
{
  boolean_matrix t( a.cols(), a.rows() );
  for ( std::size_t r = 0; r < a.rows(); ++r )
  {
    for_each_set_bit( a.row_words( r ), [&]( std::size_t c ) { t.set( c, r ); } );
  }
  return t;
}

boolean_matrix kron( const boolean_matrix& a, const boolean_matrix& b )
{
  const auto rows = checked_mul( a.rows(), b.rows(), "kron" );
  const auto cols = checked_mul( a.cols(), b.cols(), "kron" );
  boolean_matrix out( rows, cols );
  for ( std::size_t i = 0; i < a.rows(); ++i )
  {
    const auto a_cols = a.row_support( i );
    if ( a_cols.empty() )
    {
      continue;
    }
    for ( std::size_t k = 0; k < b.rows(); ++k )
    {
      const auto b_cols = b.row_support( k );
      const auto row = i * b.rows() + k;
      for ( auto j : a_cols )
      {
        for ( auto l : b_cols )
        {
          out.set( row, j * b.cols() + l );
        }
      }
    }
  }
  return out;
}

boolean_matrix bool_add( const boolean_matrix& a, const boolean_matrix& b )
{
  if ( a.rows() != b.rows() || a.cols() != b.cols() )
  {
    throw shape_error( "bool_add: shapes " + std::to_string( a.rows() ) + "x" + std::to_string( a.cols() ) + " and " +
                       std::to_string( b.rows() ) + "x" + std::to_string( b.cols() ) + " differ" );
  }
  auto out = a;
  for ( std::size_t r = 0; r < a.rows(); ++r )
  {
    out.or_row_from( r, b, r );
  }
  return out;
}

boolean_matrix bool_product( const boolean_matrix& a, const boolean_matrix& b )
{
  if ( a.cols() != b.rows() )
  {
    throw shape_error( "bool_product: inner dimensions " + std::to_string( a.cols() ) + " and " +
                       std::to_string( b.rows() ) + " differ" );
  }
  boolean_matrix out( a.rows(), b.cols() );
  for ( std::size_t r = 0; r < a.rows(); ++r )
  {
    for_each_set_bit( a.row_words( r ), [&]( std::size_t k ) { out.or_row_from( r, b, k ); } );
  }
  return out;
}

boolean_matrix stp( const boolean_matrix& a, const boolean_matrix& b )
{
  if ( a.cols() == 0 || b.rows() == 0 )
  {
    throw shape_error( "stp: operands must have positive inner dimensions" );
  }
  if ( a.cols() == b.rows() )
  {
    return bool_product( a, b );
  }
  const auto t = std::lcm( a.cols(), b.rows() );
  const auto left = a.cols() == t ? a : kron( a, boolean_matrix::identity( t / a.cols() ) );
  const auto right = b.rows() == t ? b : kron( b, boolean_matrix::identity( t / b.rows() ) );
  return bool_product( left, right );
}

boolean_matrix bool_power( const boolean_matrix& a, std::size_t k )
{
  if ( !a.square() )
  {
    throw shape_error( "bool_power: matrix is not square" );
  }
  if ( k == 0 )
  {
    throw std::invalid_argument( "bool_power: exponent must be positive" );
  }
  auto out = a;
  for ( std::size_t i = 1; i < k; ++i )
  {
    out = bool_product( out, a );
  }
  return out;
}

logical_matrix compose_logical( const logical_matrix& a, const logical_matrix& b )
{
  if ( a.cols() != b.rows() )
  {
    throw shape_error( "compose_logical: inner dimensions " + std::to_string( a.cols() ) + " and " +
                       std::to_string( b.rows() ) + " differ" );
  }
  std::vector<logical_matrix::index_type> cols( b.cols() );
  for ( std::size_t k = 0; k < b.cols(); ++k )
  {
    cols[k] = a[b[k]];
  }
  return { a.rows(), std::move( cols ) };
}

/* text forms */

std::string to_text( const logical_matrix& m )
{
  std::string out = "delta " + std::to_string( m.rows() ) + " [";
  for ( std::size_t k = 0; k < m.cols(); ++k )
  {
    if ( k != 0 )
    {
      out += ' ';
    }
    out += std::to_string( m[k] + 1 );
  }
  out += "]";
  return out;
}

std::string to_text( const boolean_matrix& m )
{
  std::string out = std::to_string( m.rows() ) + " " + std::to_string( m.cols() ) + "\n";
  out.reserve( out.size() + m.rows() * ( m.cols() + 1 ) );
  for ( std::size_t r = 0; r < m.rows(); ++r )
  {
    for ( std::size_t c = 0; c < m.cols(); ++c )
    {
      out += m( r, c ) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

namespace
{

struct text_cursor
{
  std::string_view text;
  std::size_t pos = 0;

  void skip_space()
  {
    while ( pos < text.size() && ( text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n' ) )
    {
      ++pos;
    }
  }

  bool at_end()
  {
    skip_space();
    return pos >= text.size();
  }

  bool consume( char c )
  {
    skip_space();
    if ( pos < text.size() && text[pos] == c )
    {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint64_t number( const char* what )
  {
    skip_space();
    std::uint64_t value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars( first, last, value );
    if ( ec != std::errc{} || ptr == first )
    {
      throw format_error( std::string( "expected " ) + what + " at offset " + std::to_string( pos ) );
    }
    pos += static_cast<std::size_t>( ptr - first );
    return value;
  }
};

} // namespace

logical_matrix parse_logical_matrix( std::string_view text )
{
  text_cursor in{ text };
  in.skip_space();
  if ( text.substr( in.pos, 5 ) != "delta" )
  {
    throw format_error( "logical matrix text must start with 'delta'" );
  }
  in.pos += 5;
  const auto rows = in.number( "row count" );
  if ( !in.consume( '[' ) )
  {
    throw format_error( "expected '[' after row count" );
  }
  std::vector<logical_matrix::index_type> cols;
  while ( !in.consume( ']' ) )
  {
    if ( in.at_end() )
    {
      throw format_error( "unterminated column list" );
    }
    const auto c = in.number( "column index" );
    if ( c == 0 || c > rows )
    {
      throw format_error( "column index " + std::to_string( c ) + " outside 1.." + std::to_string( rows ) );
    }
    cols.push_back( static_cast<logical_matrix::index_type>( c - 1 ) );
  }
  if ( !in.at_end() )
  {
    throw format_error( "trailing characters after logical matrix" );
  }
  try
  {
    return { static_cast<std::size_t>( rows ), std::move( cols ) };
  }
  catch ( const shape_error& e )
  {
    throw format_error( e.what() );
  }
}

boolean_matrix parse_boolean_matrix( std::string_view text )
{
  text_cursor in{ text };
  const auto rows = in.number( "row count" );
  const auto cols = in.number( "column count" );
  boolean_matrix m( rows, cols );
  for ( std::size_t r = 0; r < rows; ++r )
  {
    in.skip_space();
    if ( in.pos + cols > text.size() )
    {
      throw format_error( "row " + std::to_string( r + 1 ) + " is truncated" );
    }
    for ( std::size_t c = 0; c < cols; ++c )
    {
      const char ch = text[in.pos++];
      if ( ch != '0' && ch != '1' )
      {
        throw format_error( "row " + std::to_string( r + 1 ) + ": expected 0 or 1" );
      }
      m.set( r, c, ch == '1' );
    }
    if ( in.pos < text.size() && text[in.pos] != '\n' && text[in.pos] != '\r' && text[in.pos] != ' ' )
    {
      throw format_error( "row " + std::to_string( r + 1 ) + " is longer than " + std::to_string( cols ) );
    }
  }
  if ( !in.at_end() )
  {
    throw format_error( "trailing characters after boolean matrix" );
  }
  return m;
}

} // namespace bcn
