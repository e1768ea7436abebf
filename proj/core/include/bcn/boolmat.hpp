#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcn
{

/// Raised when operand shapes do not conform.
class shape_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a requested object would exceed the configured size ceilings.
class size_limit_error : public std::length_error
{
public:
  using std::length_error::length_error;
};

/// Raised by the canonical text readers.
class format_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Largest number of entries a dense boolean_matrix may hold (1 GiB of bits).
inline constexpr std::uint64_t max_dense_entries = std::uint64_t{ 1 } << 33;

/*! \brief Dense matrix over the Boolean semiring ({0,1}, or, and).
 *
 * Rows are bit-packed into 64-bit words; bits past `cols()` in the last word
 * of every row are kept at zero so that word-level comparisons are exact.
 * Indices are 0-based.
 */
class boolean_matrix
{
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  boolean_matrix() = default;
  boolean_matrix( std::size_t rows, std::size_t cols );

  static boolean_matrix zeros( std::size_t rows, std::size_t cols ) { return { rows, cols }; }
  static boolean_matrix ones( std::size_t rows, std::size_t cols );
  static boolean_matrix identity( std::size_t n );
  /// Builds a matrix from nested 0/1 literals; every row must have the same length.
  static boolean_matrix from_rows( std::initializer_list<std::initializer_list<int>> rows );

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  bool operator()( std::size_t row, std::size_t col ) const
  {
    return ( bits_[row * stride_ + col / word_bits] >> ( col % word_bits ) ) & 1u;
  }
  void set( std::size_t row, std::size_t col, bool value = true );

  std::span<const word_type> row_words( std::size_t row ) const
  {
    return { bits_.data() + row * stride_, stride_ };
  }
  std::span<word_type> row_words( std::size_t row )
  {
    return { bits_.data() + row * stride_, stride_ };
  }

  /// row(dst) |= other.row(src); both matrices must have the same column count.
  bool or_row_from( std::size_t dst, const boolean_matrix& other, std::size_t src );

  bool all_ones() const;
  bool none() const;
  bool row_all_ones( std::size_t row ) const;
  bool column_all_ones( std::size_t col ) const;
  std::size_t count() const;
  std::vector<std::size_t> row_support( std::size_t row ) const;
  std::vector<std::size_t> column_support( std::size_t col ) const;

  friend bool operator==( const boolean_matrix&, const boolean_matrix& ) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_type> bits_;
};

/*! \brief Matrix whose every column is a canonical basis vector.
 *
 * Column k equals e_{column(k)} in a space of dimension `rows()`; column
 * indices are 0-based. `delta()` accepts the 1-based δ_m[i1,...,ir] notation.
 */
class logical_matrix
{
public:
  using index_type = std::uint32_t;

  logical_matrix() = default;
  logical_matrix( std::size_t rows, std::vector<index_type> columns );

  /// δ_rows[i1, ..., ir] with 1-based indices.
  static logical_matrix delta( std::size_t rows, std::initializer_list<index_type> one_based );
  static logical_matrix identity( std::size_t n );

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  index_type operator[]( std::size_t col ) const { return columns_[col]; }
  std::span<const index_type> columns() const noexcept { return columns_; }

  boolean_matrix to_boolean() const;
  /// Returns nullopt unless every column of `m` has exactly one set entry.
  static std::optional<logical_matrix> from_boolean( const boolean_matrix& m );

  friend bool operator==( const logical_matrix&, const logical_matrix& ) = default;

private:
  std::size_t rows_ = 0;
  std::vector<index_type> columns_;
};

boolean_matrix transpose( const boolean_matrix& a );
boolean_matrix kron( const boolean_matrix& a, const boolean_matrix& b );
/// Entrywise or. Throws shape_error on shape mismatch.
boolean_matrix bool_add( const boolean_matrix& a, const boolean_matrix& b );
/// Conventional product over (or, and). Throws shape_error unless a.cols() == b.rows().
boolean_matrix bool_product( const boolean_matrix& a, const boolean_matrix& b );

/*! \brief Semi-tensor product over the Boolean semiring.
 *
 * With t = lcm(a.cols(), b.rows()) the result is
 * (a ⊗ I_{t/a.cols()}) ×_B (b ⊗ I_{t/b.rows()}). Reduces to bool_product when
 * the inner dimensions agree.
 */
boolean_matrix stp( const boolean_matrix& a, const boolean_matrix& b );

/// k-fold Boolean product a ×_B ... ×_B a, computed by plain iteration; k >= 1.
boolean_matrix bool_power( const boolean_matrix& a, std::size_t k );

/// Index composition: result[k] = a[b[k]]. Equals the Boolean product of the embeddings.
logical_matrix compose_logical( const logical_matrix& a, const logical_matrix& b );

// Canonical text forms. Logical: `delta <rows> [c1 c2 ... cr]` with 1-based
// indices. Boolean: a `<rows> <cols>` header line then one line of 0/1 per row.
std::string to_text( const logical_matrix& m );
std::string to_text( const boolean_matrix& m );
logical_matrix parse_logical_matrix( std::string_view text );
boolean_matrix parse_boolean_matrix( std::string_view text );

} // namespace bcn
