#include <bcn/netlang.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <unordered_map>

namespace bcn
{

/* expr */

struct expr::node
{
  expr_kind kind;
  bool value = false;
  std::string name;
  std::optional<expr> lhs;
  std::optional<expr> rhs;
};

expr expr::constant( bool value )
{
  return expr( std::make_shared<const node>( node{ expr_kind::constant, value, {}, {}, {} } ) );
}

expr expr::variable( std::string name )
{
  return expr( std::make_shared<const node>( node{ expr_kind::variable, false, std::move( name ), {}, {} } ) );
}

expr expr::negation( expr operand )
{
  return expr( std::make_shared<const node>( node{ expr_kind::negation, false, {}, std::move( operand ), {} } ) );
}

expr expr::binary( expr_kind kind, expr lhs, expr rhs )
{
  if ( kind == expr_kind::constant || kind == expr_kind::variable || kind == expr_kind::negation )
  {
    throw std::invalid_argument( "expr::binary: not a binary operator" );
  }
  return expr( std::make_shared<const node>( node{ kind, false, {}, std::move( lhs ), std::move( rhs ) } ) );
}

expr_kind expr::kind() const noexcept { return node_->kind; }
bool expr::value() const noexcept { return node_->value; }
const std::string& expr::name() const noexcept { return node_->name; }
const expr& expr::lhs() const noexcept { return *node_->lhs; }
const expr& expr::rhs() const noexcept { return *node_->rhs; }

bool operator==( const expr& a, const expr& b )
{
  if ( a.node_ == b.node_ )
  {
    return true;
  }
  if ( a.kind() != b.kind() )
  {
    return false;
  }
  switch ( a.kind() )
  {
  case expr_kind::constant:
    return a.value() == b.value();
  case expr_kind::variable:
    return a.name() == b.name();
  case expr_kind::negation:
    return a.operand() == b.operand();
  default:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

bool eval_expr( const expr& e, const assignment& env )
{
  switch ( e.kind() )
  {
  case expr_kind::constant:
    return e.value();
  case expr_kind::variable:
  {
    const auto it = env.find( e.name() );
    if ( it == env.end() )
    {
      throw evaluation_error( "unbound variable '" + e.name() + "'" );
    }
    return it->second;
  }
  case expr_kind::negation:
    return !eval_expr( e.operand(), env );
  case expr_kind::conjunction:
    return eval_expr( e.lhs(), env ) && eval_expr( e.rhs(), env );
  case expr_kind::exclusive_or:
    return eval_expr( e.lhs(), env ) != eval_expr( e.rhs(), env );
  case expr_kind::disjunction:
    return eval_expr( e.lhs(), env ) || eval_expr( e.rhs(), env );
  case expr_kind::implication:
    return !eval_expr( e.lhs(), env ) || eval_expr( e.rhs(), env );
  case expr_kind::equivalence:
    return eval_expr( e.lhs(), env ) == eval_expr( e.rhs(), env );
  }
  return false;
}

namespace
{

void collect_variables( const expr& e, std::vector<std::string>& out )
{
  switch ( e.kind() )
  {
  case expr_kind::constant:
    return;
  case expr_kind::variable:
    if ( std::find( out.begin(), out.end(), e.name() ) == out.end() )
    {
      out.push_back( e.name() );
    }
    return;
  case expr_kind::negation:
    collect_variables( e.operand(), out );
    return;
  default:
    collect_variables( e.lhs(), out );
    collect_variables( e.rhs(), out );
  }
}

// Binding strength; higher binds tighter.
int precedence( expr_kind kind )
{
  switch ( kind )
  {
  case expr_kind::equivalence:
    return 1;
  case expr_kind::implication:
    return 2;
  case expr_kind::disjunction:
    return 3;
  case expr_kind::exclusive_or:
    return 4;
  case expr_kind::conjunction:
    return 5;
  case expr_kind::negation:
    return 6;
  default:
    return 7;
  }
}

const char* symbol( expr_kind kind )
{
  switch ( kind )
  {
  case expr_kind::conjunction:
    return "&";
  case expr_kind::exclusive_or:
    return "^";
  case expr_kind::disjunction:
    return "|";
  case expr_kind::implication:
    return "->";
  case expr_kind::equivalence:
    return "<->";
  default:
    return "?";
  }
}

void print( const expr& e, std::string& out );

void print_operand( const expr& e, bool parens, std::string& out )
{
  if ( parens )
  {
    out += '(';
  }
  print( e, out );
  if ( parens )
  {
    out += ')';
  }
}

void print( const expr& e, std::string& out )
{
  const auto kind = e.kind();
  switch ( kind )
  {
  case expr_kind::constant:
    out += e.value() ? '1' : '0';
    return;
  case expr_kind::variable:
    out += e.name();
    return;
  case expr_kind::negation:
    out += '!';
    print_operand( e.operand(), precedence( e.operand().kind() ) < precedence( kind ), out );
    return;
  default:
    break;
  }
  const auto p = precedence( kind );
  const bool right_assoc = kind == expr_kind::implication;
  const auto lp = precedence( e.lhs().kind() );
  const auto rp = precedence( e.rhs().kind() );
  print_operand( e.lhs(), lp < p || ( lp == p && right_assoc ), out );
  out += ' ';
  out += symbol( kind );
  out += ' ';
  print_operand( e.rhs(), rp < p || ( rp == p && !right_assoc ), out );
}

/* lexer */

enum class tok
{
  ident,
  zero,
  one,
  prime,
  assign,
  comma,
  colon,
  lparen,
  rparen,
  bang,
  amp,
  caret,
  pipe,
  arrow,
  iff,
  newline,
  end
};

struct token
{
  tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe( tok t )
{
  switch ( t )
  {
  case tok::ident:
    return "identifier";
  case tok::zero:
  case tok::one:
    return "constant";
  case tok::prime:
    return "'''";
  case tok::assign:
    return "'='";
  case tok::comma:
    return "','";
  case tok::colon:
    return "':'";
  case tok::lparen:
    return "'('";
  case tok::rparen:
    return "')'";
  case tok::bang:
    return "'!'";
  case tok::amp:
    return "'&'";
  case tok::caret:
    return "'^'";
  case tok::pipe:
    return "'|'";
  case tok::arrow:
    return "'->'";
  case tok::iff:
    return "'<->'";
  case tok::newline:
    return "end of line";
  case tok::end:
    return "end of input";
  }
  return "token";
}

std::vector<token> lex( std::string_view text )
{
  std::vector<token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto push = [&]( tok type, std::size_t len ) {
    out.push_back( { type, std::string( text.substr( i, len ) ), line, column } );
    i += len;
    column += len;
  };
  while ( i < text.size() )
  {
    const char c = text[i];
    if ( c == '\n' )
    {
      push( tok::newline, 1 );
      ++line;
      column = 1;
      continue;
    }
    if ( c == ' ' || c == '\t' || c == '\r' )
    {
      ++i;
      ++column;
      continue;
    }
    if ( c == '#' )
    {
      while ( i < text.size() && text[i] != '\n' )
      {
        ++i;
        ++column;
      }
      continue;
    }
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      std::size_t len = 1;
      while ( i + len < text.size() &&
              ( std::isalnum( static_cast<unsigned char>( text[i + len] ) ) || text[i + len] == '_' ) )
      {
        ++len;
      }
      push( tok::ident, len );
      continue;
    }
    if ( c == '0' || c == '1' )
    {
      if ( i + 1 < text.size() && std::isalnum( static_cast<unsigned char>( text[i + 1] ) ) )
      {
        throw parse_error( parse_error_kind::lexical, line, column, "malformed constant" );
      }
      push( c == '0' ? tok::zero : tok::one, 1 );
      continue;
    }
    if ( text.substr( i, 3 ) == "<->" )
    {
      push( tok::iff, 3 );
      continue;
    }
    if ( text.substr( i, 2 ) == "->" )
    {
      push( tok::arrow, 2 );
      continue;
    }
    switch ( c )
    {
    case '\'':
      push( tok::prime, 1 );
      continue;
    case '=':
      push( tok::assign, 1 );
      continue;
    case ',':
      push( tok::comma, 1 );
      continue;
    case ':':
      push( tok::colon, 1 );
      continue;
    case '(':
      push( tok::lparen, 1 );
      continue;
    case ')':
      push( tok::rparen, 1 );
      continue;
    case '!':
      push( tok::bang, 1 );
      continue;
    case '&':
      push( tok::amp, 1 );
      continue;
    case '^':
      push( tok::caret, 1 );
      continue;
    case '|':
      push( tok::pipe, 1 );
      continue;
    default:
      break;
    }
    throw parse_error( parse_error_kind::lexical, line, column,
                       std::string( "unexpected character '" ) + c + "'" );
  }
  out.push_back( { tok::end, {}, line, column } );
  return out;
}

const std::set<std::string, std::less<>> keywords{ "network", "states", "inputs", "outputs" };

struct var_ref
{
  std::string name;
  std::size_t line;
  std::size_t column;
};

/* recursive-descent parser */

class parser
{
public:
  explicit parser( std::vector<token> tokens ) : tokens_( std::move( tokens ) ) {}

  const token& peek() const { return tokens_[pos_]; }
  const token& next() { return tokens_[pos_++]; }
  bool accept( tok t )
  {
    if ( peek().type == t )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  const token& expect( tok t, const char* context )
  {
    if ( peek().type != t )
    {
      fail( std::string( "expected " ) + describe( t ) + " " + context + ", found " + found() );
    }
    return next();
  }

  [[noreturn]] void fail( const std::string& message ) const
  {
    throw parse_error( parse_error_kind::syntax, peek().line, peek().column, message );
  }

  std::string found() const
  {
    const auto& t = peek();
    if ( t.type == tok::ident )
    {
      return "'" + t.text + "'";
    }
    return describe( t.type );
  }

  void skip_newlines()
  {
    while ( accept( tok::newline ) )
    {
    }
  }

  void end_of_line()
  {
    if ( peek().type != tok::end )
    {
      expect( tok::newline, "at end of line" );
    }
  }

  expr parse_expression( std::vector<var_ref>& refs )
  {
    auto lhs = parse_implication( refs );
    while ( accept( tok::iff ) )
    {
      lhs = expr::binary( expr_kind::equivalence, std::move( lhs ), parse_implication( refs ) );
    }
    return lhs;
  }

private:
  expr parse_implication( std::vector<var_ref>& refs )
  {
    auto lhs = parse_left( refs, 0 );
    if ( accept( tok::arrow ) )
    {
      return expr::binary( expr_kind::implication, std::move( lhs ), parse_implication( refs ) );
    }
    return lhs;
  }

  // Left-associative levels: 0 = '|', 1 = '^', 2 = '&'.
  expr parse_left( std::vector<var_ref>& refs, int level )
  {
    static constexpr tok ops[] = { tok::pipe, tok::caret, tok::amp };
    static constexpr expr_kind kinds[] = { expr_kind::disjunction, expr_kind::exclusive_or, expr_kind::conjunction };
    auto operand = [&] { return level == 2 ? parse_unary( refs ) : parse_left( refs, level + 1 ); };
    auto lhs = operand();
    while ( accept( ops[level] ) )
    {
      lhs = expr::binary( kinds[level], std::move( lhs ), operand() );
    }
    return lhs;
  }

  expr parse_unary( std::vector<var_ref>& refs )
  {
    if ( accept( tok::bang ) )
    {
      return expr::negation( parse_unary( refs ) );
    }
    const auto& t = peek();
    switch ( t.type )
    {
    case tok::zero:
      next();
      return expr::constant( false );
    case tok::one:
      next();
      return expr::constant( true );
    case tok::ident:
      if ( keywords.contains( t.text ) )
      {
        fail( "keyword '" + t.text + "' cannot be used as a variable" );
      }
      refs.push_back( { t.text, t.line, t.column } );
      next();
      return expr::variable( t.text );
    case tok::lparen:
    {
      next();
      auto inner = parse_expression( refs );
      expect( tok::rparen, "to close '('" );
      return inner;
    }
    default:
      fail( "expected an expression, found " + found() );
    }
  }

  std::vector<token> tokens_;
  std::size_t pos_ = 0;
};

struct pending_rule
{
  std::string target;
  bool primed;
  std::size_t line;
  std::size_t column;
  expr body;
  std::vector<var_ref> refs;
};

std::vector<std::string> parse_name_list( parser& p, std::vector<std::pair<std::string, token>>& declared )
{
  std::vector<std::string> names;
  if ( p.peek().type == tok::newline || p.peek().type == tok::end )
  {
    return names;
  }
  do
  {
    const auto& t = p.expect( tok::ident, "in declaration list" );
    if ( keywords.contains( t.text ) )
    {
      throw parse_error( parse_error_kind::syntax, t.line, t.column, "keyword '" + t.text + "' cannot be declared" );
    }
    for ( const auto& [name, where] : declared )
    {
      if ( name == t.text )
      {
        throw parse_error( parse_error_kind::duplicate_declaration, t.line, t.column,
                           "'" + t.text + "' is already declared at line " + std::to_string( where.line ) );
      }
    }
    declared.emplace_back( t.text, t );
    names.push_back( t.text );
  } while ( p.accept( tok::comma ) );
  return names;
}

} // namespace

std::string to_string( const expr& e )
{
  std::string out;
  print( e, out );
  return out;
}

std::vector<std::string> free_variables( const expr& e )
{
  std::vector<std::string> out;
  collect_variables( e, out );
  return out;
}

parse_error::parse_error( parse_error_kind kind, std::size_t line, std::size_t column, const std::string& message )
    : std::runtime_error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
      kind_( kind ), line_( line ), column_( column ), message_( message )
{
}

expr parse_expr( std::string_view text )
{
  parser p( lex( text ) );
  p.skip_newlines();
  std::vector<var_ref> refs;
  auto e = p.parse_expression( refs );
  p.skip_newlines();
  if ( p.peek().type != tok::end )
  {
    p.fail( "unexpected " + p.found() + " after expression" );
  }
  return e;
}

network_model parse_network( std::string_view text )
{
  parser p( lex( text ) );
  network_model model;

  p.skip_newlines();
  const auto& kw = p.peek();
  if ( kw.type != tok::ident || kw.text != "network" )
  {
    p.fail( "expected 'network <name>' header, found " + p.found() );
  }
  p.next();
  model.name = p.expect( tok::ident, "after 'network'" ).text;
  p.end_of_line();

  std::vector<std::pair<std::string, token>> declared;
  std::set<std::string, std::less<>> seen_headers;
  std::vector<pending_rule> rules;

  for ( p.skip_newlines(); p.peek().type != tok::end; p.skip_newlines() )
  {
    const auto head = p.next();
    if ( head.type != tok::ident )
    {
      throw parse_error( parse_error_kind::syntax, head.line, head.column,
                         std::string( "expected a declaration or rule, found " ) + describe( head.type ) );
    }
    if ( head.text == "states" || head.text == "inputs" || head.text == "outputs" )
    {
      if ( !rules.empty() )
      {
        throw parse_error( parse_error_kind::syntax, head.line, head.column,
                           "declarations must precede update and output rules" );
      }
      if ( !seen_headers.insert( head.text ).second )
      {
        throw parse_error( parse_error_kind::duplicate_declaration, head.line, head.column,
                           "'" + head.text + ":' declared twice" );
      }
      p.expect( tok::colon, ( "after '" + head.text + "'" ).c_str() );
      auto names = parse_name_list( p, declared );
      ( head.text == "states" ? model.states : head.text == "inputs" ? model.inputs : model.outputs ) =
          std::move( names );
      p.end_of_line();
      continue;
    }
    if ( keywords.contains( head.text ) )
    {
      throw parse_error( parse_error_kind::syntax, head.line, head.column, "unexpected '" + head.text + "'" );
    }
    pending_rule rule{ head.text, p.accept( tok::prime ), head.line, head.column, expr::constant( false ), {} };
    p.expect( tok::assign, "in rule" );
    rule.body = p.parse_expression( rule.refs );
    p.end_of_line();
    rules.push_back( std::move( rule ) );
  }

  if ( model.states.empty() )
  {
    const auto& t = p.peek();
    throw parse_error( parse_error_kind::syntax, t.line, t.column, "network declares no states" );
  }

  auto index_of = []( const std::vector<std::string>& names, std::string_view name ) -> std::optional<std::size_t> {
    const auto it = std::find( names.begin(), names.end(), name );
    if ( it == names.end() )
    {
      return std::nullopt;
    }
    return static_cast<std::size_t>( it - names.begin() );
  };

  std::vector<std::optional<expr>> updates( model.n() ), maps( model.p() );
  for ( const auto& rule : rules )
  {
    if ( rule.primed )
    {
      const auto idx = index_of( model.states, rule.target );
      if ( !idx )
      {
        throw parse_error( index_of( model.outputs, rule.target ) || index_of( model.inputs, rule.target )
                               ? parse_error_kind::syntax
                               : parse_error_kind::unknown_variable,
                           rule.line, rule.column, "'" + rule.target + "' is not a declared state" );
      }
      if ( updates[*idx] )
      {
        throw parse_error( parse_error_kind::duplicate_rule, rule.line, rule.column,
                           "second update rule for '" + rule.target + "'" );
      }
      for ( const auto& ref : rule.refs )
      {
        if ( index_of( model.states, ref.name ) || index_of( model.inputs, ref.name ) )
        {
          continue;
        }
        if ( index_of( model.outputs, ref.name ) )
        {
          throw parse_error( parse_error_kind::update_references_output, ref.line, ref.column,
                             "update of '" + rule.target + "' references output '" + ref.name + "'" );
        }
        throw parse_error( parse_error_kind::unknown_variable, ref.line, ref.column,
                           "unknown variable '" + ref.name + "'" );
      }
      updates[*idx] = rule.body;
    }
    else
    {
      const auto idx = index_of( model.outputs, rule.target );
      if ( !idx )
      {
        if ( index_of( model.states, rule.target ) )
        {
          throw parse_error( parse_error_kind::syntax, rule.line, rule.column,
                             "update rule for state '" + rule.target + "' needs a prime (" + rule.target + "')" );
        }
        throw parse_error( index_of( model.inputs, rule.target ) ? parse_error_kind::syntax
                                                                 : parse_error_kind::unknown_variable,
                           rule.line, rule.column, "'" + rule.target + "' is not a declared output" );
      }
      if ( maps[*idx] )
      {
        throw parse_error( parse_error_kind::duplicate_rule, rule.line, rule.column,
                           "second output rule for '" + rule.target + "'" );
      }
      for ( const auto& ref : rule.refs )
      {
        if ( index_of( model.states, ref.name ) )
        {
          continue;
        }
        if ( index_of( model.inputs, ref.name ) )
        {
          throw parse_error( parse_error_kind::output_references_input, ref.line, ref.column,
                             "output references input '" + ref.name + "'" );
        }
        if ( index_of( model.outputs, ref.name ) )
        {
          throw parse_error( parse_error_kind::unknown_variable, ref.line, ref.column,
                             "output '" + rule.target + "' references output '" + ref.name + "'" );
        }
        throw parse_error( parse_error_kind::unknown_variable, ref.line, ref.column,
                           "unknown variable '" + ref.name + "'" );
      }
      maps[*idx] = rule.body;
    }
  }

  const auto& eof = p.peek();
  for ( std::size_t i = 0; i < model.n(); ++i )
  {
    if ( !updates[i] )
    {
      throw parse_error( parse_error_kind::missing_rule, eof.line, eof.column,
                         "no update rule for state '" + model.states[i] + "'" );
    }
    model.updates.push_back( *updates[i] );
  }
  for ( std::size_t i = 0; i < model.p(); ++i )
  {
    if ( !maps[i] )
    {
      throw parse_error( parse_error_kind::missing_rule, eof.line, eof.column,
                         "no rule for output '" + model.outputs[i] + "'" );
    }
    model.output_maps.push_back( *maps[i] );
  }
  return model;
}

std::string to_source( const network_model& model )
{
  auto join = []( const std::vector<std::string>& names ) {
    std::string out;
    for ( std::size_t i = 0; i < names.size(); ++i )
    {
      out += ( i == 0 ? "" : ", " ) + names[i];
    }
    return out;
  };
  std::string out = "network " + model.name + "\n";
  out += "states: " + join( model.states ) + "\n";
  if ( !model.inputs.empty() )
  {
    out += "inputs: " + join( model.inputs ) + "\n";
  }
  if ( !model.outputs.empty() )
  {
    out += "outputs: " + join( model.outputs ) + "\n";
  }
  out += "\n";
  for ( std::size_t i = 0; i < model.n(); ++i )
  {
    out += model.states[i] + "' = " + to_string( model.updates[i] ) + "\n";
  }
  for ( std::size_t i = 0; i < model.p(); ++i )
  {
    out += model.outputs[i] + " = " + to_string( model.output_maps[i] ) + "\n";
  }
  return out;
}

} // namespace bcn
