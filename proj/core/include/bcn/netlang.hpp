#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcn
{

enum class expr_kind
{
  constant,
  variable,
  negation,
  conjunction,
  exclusive_or,
  disjunction,
  implication,
  equivalence
};

/*! \brief Immutable Boolean expression tree.
 *
 * Nodes are shared between copies. Equality is structural.
 */
class expr
{
public:
  static expr constant( bool value );
  static expr variable( std::string name );
  static expr negation( expr operand );
  static expr binary( expr_kind kind, expr lhs, expr rhs );

  expr_kind kind() const noexcept;
  bool value() const noexcept;
  const std::string& name() const noexcept;
  const expr& operand() const noexcept { return lhs(); }
  const expr& lhs() const noexcept;
  const expr& rhs() const noexcept;

  friend bool operator==( const expr& a, const expr& b );

private:
  struct node;
  explicit expr( std::shared_ptr<const node> n ) : node_( std::move( n ) ) {}
  std::shared_ptr<const node> node_;
};

/// Name → value map used by eval_expr.
using assignment = std::map<std::string, bool, std::less<>>;

class evaluation_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Standard two-valued semantics; `->` is material implication. Throws evaluation_error on an unbound name.
bool eval_expr( const expr& e, const assignment& env );

/// Names referenced by `e`, in first-occurrence order.
std::vector<std::string> free_variables( const expr& e );

/// Source form with the minimal parentheses needed to re-parse to the same tree.
std::string to_string( const expr& e );

/// A Boolean control network: x(t+1) = f(x(t), u(t)), y(t) = h(x(t)).
struct network_model
{
  std::string name;
  std::vector<std::string> states;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<expr> updates;     ///< aligned with `states`
  std::vector<expr> output_maps; ///< aligned with `outputs`

  std::size_t n() const noexcept { return states.size(); }
  std::size_t m() const noexcept { return inputs.size(); }
  std::size_t p() const noexcept { return outputs.size(); }

  friend bool operator==( const network_model&, const network_model& ) = default;
};

enum class parse_error_kind
{
  lexical,
  syntax,
  unknown_variable,
  duplicate_declaration,
  duplicate_rule,
  missing_rule,
  output_references_input,
  update_references_output
};

/// Diagnostic from parse_network / parse_expr; line and column are 1-based.
class parse_error : public std::runtime_error
{
public:
  parse_error( parse_error_kind kind, std::size_t line, std::size_t column, const std::string& message );

  parse_error_kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  parse_error_kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/*! \brief Parses and validates a `.bcn` network description.
 *
 * \code
 * network toy
 * states: x1, x2
 * inputs: u1, u2
 * outputs: y1
 * x1' = (x1 <-> x2) | u1
 * x2' = !x1 & u2
 * y1 = x1 & x2
 * \endcode
 *
 * Operators from tightest to loosest: `!`, `&`, `^`, `|`, `->` (right
 * associative), `<->`. `#` starts a comment.
 */
network_model parse_network( std::string_view text );

/// Parses a single expression (no declarations, no validation of names).
expr parse_expr( std::string_view text );

/// Emits `.bcn` source that parses back to an equal model.
std::string to_source( const network_model& model );

} // namespace bcn
