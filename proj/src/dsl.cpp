#include "cld/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cld/composite.hpp"
#include "cld/connectives.hpp"

namespace cld::dsl {

namespace {

const std::map<std::string, TokenType, std::less<>>& keywords() {
  static const std::map<std::string, TokenType, std::less<>> kw = {
      {"let", TokenType::KwLet},           {"matrix", TokenType::KwMatrix},
      {"show", TokenType::KwShow},         {"not", TokenType::KwNot},
      {"and", TokenType::KwAnd},           {"or", TokenType::KwOr},
      {"tensor", TokenType::KwTensor},     {"proj1", TokenType::KwProj1},
      {"proj2", TokenType::KwProj2},       {"context", TokenType::KwContext},
      {"dist", TokenType::KwDist},         {"apply", TokenType::KwApply},
      {"decompose", TokenType::KwDecompose}, {"x", TokenType::KwX},
  };
  return kw;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

} // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  size_t i = 0;
  SourcePos pos{1, 1};
  const auto advance = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.col = 1;
    } else {
      ++pos.col;
    }
    ++i;
  };
  while (i < source.size()) {
    const char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(c);
      continue;
    }
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance(source[i]);
      continue;
    }
    const SourcePos start = pos;
    if (is_digit(c)) {
      std::string text;
      while (i < source.size() && is_digit(source[i])) {
        text += source[i];
        advance(source[i]);
      }
      tokens.push_back({TokenType::Int, std::move(text), start});
      // "4x4": a dimension separator directly after a number; an identifier
      // like "x4" elsewhere is untouched because this only fires here
      if (i + 1 < source.size() && source[i] == 'x' && is_digit(source[i + 1])) {
        tokens.push_back({TokenType::KwX, "x", pos});
        advance('x');
      }
      continue;
    }
    if (is_ident_start(c)) {
      std::string text;
      while (i < source.size() && is_ident_char(source[i])) {
        text += source[i];
        advance(source[i]);
      }
      const auto kw = keywords().find(text);
      tokens.push_back({kw != keywords().end() ? kw->second : TokenType::Ident,
                        std::move(text), start});
      continue;
    }
    TokenType type;
    switch (c) {
      case '[': type = TokenType::LBracket; break;
      case ']': type = TokenType::RBracket; break;
      case '(': type = TokenType::LParen; break;
      case ')': type = TokenType::RParen; break;
      case ',': type = TokenType::Comma; break;
      case ';': type = TokenType::Semi; break;
      case '=': type = TokenType::Eq; break;
      case '/': type = TokenType::Slash; break;
      default:
        throw LexError(start, std::string("illegal character '") + c + "'");
    }
    tokens.push_back({type, std::string(1, c), start});
    advance(c);
  }
  tokens.push_back({TokenType::End, "", pos});
  return tokens;
}

namespace {

class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Script parse_script() {
    Script script;
    while (peek().type != TokenType::End) script.stmts.push_back(parse_stmt());
    return script;
  }

private:
  const std::vector<Token>& tokens_;
  size_t at_ = 0;

  const Token& peek(size_t ahead = 0) const {
    const size_t k = at_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  const Token& advance() { return tokens_[at_++]; }

  [[noreturn]] void fail(const Token& tok, const std::string& expected) {
    const std::string got =
        tok.type == TokenType::End ? "end of input" : "'" + tok.text + "'";
    throw ParseError(tok.pos, "expected " + expected + ", got " + got);
  }

  const Token& expect(TokenType type, const std::string& expected) {
    if (peek().type != type) fail(peek(), expected);
    return advance();
  }

  long long int_value(const Token& tok) {
    try {
      return std::stoll(tok.text);
    } catch (const std::exception&) {
      throw ParseError(tok.pos, "integer '" + tok.text + "' is out of range");
    }
  }

  Stmt parse_stmt() {
    const Token& tok = peek();
    switch (tok.type) {
      case TokenType::KwLet: return parse_let();
      case TokenType::KwMatrix: return parse_matrix();
      case TokenType::KwShow: return parse_show();
      default: fail(tok, "a statement ('let', 'matrix' or 'show')");
    }
  }

  Stmt parse_let() {
    Stmt stmt;
    stmt.kind = Stmt::Kind::LetValue;
    stmt.pos = advance().pos;
    stmt.name = expect(TokenType::Ident, "a name after 'let'").text;
    expect(TokenType::Eq, "'='");
    stmt.expr = parse_expr();
    expect(TokenType::Semi, "';'");
    return stmt;
  }

  Stmt parse_matrix() {
    Stmt stmt;
    stmt.kind = Stmt::Kind::LetMatrix;
    stmt.pos = advance().pos;
    stmt.name = expect(TokenType::Ident, "a name after 'matrix'").text;
    expect(TokenType::Eq, "'='");
    const Token& rows_tok = expect(TokenType::Int, "a row count");
    expect(TokenType::KwX, "'x' between dimensions");
    const Token& cols_tok = expect(TokenType::Int, "a column count");
    const long long rows = int_value(rows_tok);
    const long long cols = int_value(cols_tok);
    if (rows < 1) throw ParseError(rows_tok.pos, "row count must be >= 1");
    if (cols < 1) throw ParseError(cols_tok.pos, "column count must be >= 1");
    expect(TokenType::LBracket, "'['");
    std::vector<int> col_map;
    while (true) {
      const Token& entry = expect(TokenType::Int, "a 1-based row index");
      const long long row = int_value(entry);
      if (row < 1 || row > rows)
        throw ParseError(entry.pos, "row index " + entry.text +
                                        " out of range 1.." + std::to_string(rows));
      col_map.push_back(static_cast<int>(row));
      if (peek().type == TokenType::Comma) {
        advance();
        continue;
      }
      break;
    }
    const Token& close = expect(TokenType::RBracket, "',' or ']'");
    if (static_cast<long long>(col_map.size()) != cols)
      throw ParseError(close.pos,
                       "matrix declared " + std::to_string(cols) + " columns but " +
                           std::to_string(col_map.size()) + " entries given");
    expect(TokenType::Semi, "';'");
    stmt.rows = static_cast<int>(rows);
    stmt.col_map = std::move(col_map);
    return stmt;
  }

  Stmt parse_show() {
    Stmt stmt;
    stmt.kind = Stmt::Kind::Show;
    stmt.pos = advance().pos;
    stmt.expr = parse_expr();
    expect(TokenType::Semi, "';'");
    return stmt;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (peek().type == TokenType::KwOr) {
      const SourcePos pos = advance().pos;
      ExprPtr rhs = parse_and();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::Or;
      node->pos = pos;
      node->args.push_back(std::move(lhs));
      node->args.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_unary();
    while (peek().type == TokenType::KwAnd) {
      const SourcePos pos = advance().pos;
      ExprPtr rhs = parse_unary();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::And;
      node->pos = pos;
      node->args.push_back(std::move(lhs));
      node->args.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (peek().type == TokenType::KwNot) {
      const SourcePos pos = advance().pos;
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::Not;
      node->pos = pos;
      node->args.push_back(parse_unary());
      return node;
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    const Token& tok = peek();
    switch (tok.type) {
      case TokenType::LBracket: return parse_literal();
      case TokenType::Ident: {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Ident;
        node->pos = tok.pos;
        node->name = advance().text;
        return node;
      }
      case TokenType::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(TokenType::RParen, "')'");
        return inner;
      }
      case TokenType::KwTensor: return parse_call(Expr::Kind::Tensor, 2);
      case TokenType::KwDist: return parse_call(Expr::Kind::Dist, 2);
      case TokenType::KwProj1: return parse_call(Expr::Kind::Proj1, 1);
      case TokenType::KwProj2: return parse_call(Expr::Kind::Proj2, 1);
      case TokenType::KwContext: return parse_call(Expr::Kind::Context, 1);
      case TokenType::KwDecompose: return parse_call(Expr::Kind::Decompose, 1);
      case TokenType::KwApply: return parse_apply();
      default: fail(tok, "an expression");
    }
  }

  ExprPtr parse_call(Expr::Kind kind, int arity) {
    auto node = std::make_unique<Expr>();
    node->kind = kind;
    node->pos = advance().pos;
    expect(TokenType::LParen, "'('");
    for (int k = 0; k < arity; ++k) {
      if (k) expect(TokenType::Comma, "','");
      node->args.push_back(parse_expr());
    }
    expect(TokenType::RParen, "')'");
    return node;
  }

  ExprPtr parse_apply() {
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::Apply;
    node->pos = advance().pos;
    expect(TokenType::LParen, "'('");
    node->name = expect(TokenType::Ident, "a matrix name").text;
    expect(TokenType::Comma, "','");
    node->args.push_back(parse_expr());
    expect(TokenType::RParen, "')'");
    return node;
  }

  ExprPtr parse_literal() {
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::Literal;
    node->pos = expect(TokenType::LBracket, "'['").pos;
    while (true) {
      node->literal.push_back(parse_rational());
      if (peek().type == TokenType::Comma) {
        advance();
        continue;
      }
      break;
    }
    expect(TokenType::RBracket, "',' or ']'");
    return node;
  }

  Rational parse_rational() {
    const Token& num = expect(TokenType::Int, "a rational number");
    std::string text = num.text;
    if (peek().type == TokenType::Slash) {
      advance();
      const Token& den = expect(TokenType::Int, "a denominator");
      if (den.text.find_first_not_of('0') == std::string::npos)
        throw ParseError(den.pos, "denominator must be nonzero");
      text += "/" + den.text;
    }
    return Rational::parse(text);
  }
};

} // namespace

Script parse(const std::vector<Token>& tokens) {
  return Parser(tokens).parse_script();
}

Script parse(std::string_view source) { return parse(tokenize(source)); }

namespace {

// Precedence levels for minimal parenthesization.
int precedence(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And: return 2;
    case Expr::Kind::Not: return 3;
    default: return 4;
  }
}

void print_expr(std::ostream& os, const Expr& e, int min_level) {
  const bool parens = precedence(e.kind) < min_level;
  if (parens) os << '(';
  switch (e.kind) {
    case Expr::Kind::Literal: {
      os << '[';
      for (size_t k = 0; k < e.literal.size(); ++k) {
        if (k) os << ", ";
        os << e.literal[k];
      }
      os << ']';
      break;
    }
    case Expr::Kind::Ident: os << e.name; break;
    case Expr::Kind::Not:
      os << "not ";
      print_expr(os, *e.args[0], 3);
      break;
    case Expr::Kind::And:
      print_expr(os, *e.args[0], 2);
      os << " and ";
      print_expr(os, *e.args[1], 3);
      break;
    case Expr::Kind::Or:
      print_expr(os, *e.args[0], 1);
      os << " or ";
      print_expr(os, *e.args[1], 2);
      break;
    case Expr::Kind::Tensor:
    case Expr::Kind::Dist: {
      os << (e.kind == Expr::Kind::Tensor ? "tensor" : "dist") << '(';
      print_expr(os, *e.args[0], 1);
      os << ", ";
      print_expr(os, *e.args[1], 1);
      os << ')';
      break;
    }
    case Expr::Kind::Proj1:
    case Expr::Kind::Proj2:
    case Expr::Kind::Context:
    case Expr::Kind::Decompose: {
      const char* name = e.kind == Expr::Kind::Proj1     ? "proj1"
                         : e.kind == Expr::Kind::Proj2   ? "proj2"
                         : e.kind == Expr::Kind::Context ? "context"
                                                         : "decompose";
      os << name << '(';
      print_expr(os, *e.args[0], 1);
      os << ')';
      break;
    }
    case Expr::Kind::Apply:
      os << "apply(" << e.name << ", ";
      print_expr(os, *e.args[0], 1);
      os << ')';
      break;
  }
  if (parens) os << ')';
}

} // namespace

std::string pretty_print(const Script& script) {
  std::ostringstream os;
  for (const auto& stmt : script.stmts) {
    switch (stmt.kind) {
      case Stmt::Kind::LetValue:
        os << "let " << stmt.name << " = ";
        print_expr(os, *stmt.expr, 1);
        os << ";\n";
        break;
      case Stmt::Kind::LetMatrix: {
        os << "matrix " << stmt.name << " = " << stmt.rows << 'x'
           << stmt.col_map.size() << " [";
        for (size_t k = 0; k < stmt.col_map.size(); ++k) {
          if (k) os << ", ";
          os << stmt.col_map[k];
        }
        os << "];\n";
        break;
      }
      case Stmt::Kind::Show:
        os << "show ";
        print_expr(os, *stmt.expr, 1);
        os << ";\n";
        break;
    }
  }
  return os.str();
}

std::string format_value(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  if (const auto* p = std::get_if<Proposition>(&v)) return p->str();
  const auto& [first, second] = std::get<std::pair<Proposition, Proposition>>(v);
  return "(" + first.str() + ", " + second.str() + ")";
}

namespace {

struct Binding {
  // exactly one engaged; matrices and values share the namespace
  std::optional<Value> value;
  std::optional<AdmissibleMatrix> matrix;
};

class Evaluator {
public:
  Evaluator() {
    // built-in connective selectors, addressable as matrices by name
    for (const char* name : {"not4", "and4", "or4", "not2", "and2", "or2"})
      env_.emplace(name,
                   Binding{std::nullopt, builtin_connective(name).selector});
  }

  std::vector<Value> run(const Script& script) {
    std::vector<Value> shown;
    for (const auto& stmt : script.stmts) {
      switch (stmt.kind) {
        case Stmt::Kind::LetValue:
          define(stmt.name, stmt.pos, Binding{eval_expr(*stmt.expr), std::nullopt});
          break;
        case Stmt::Kind::LetMatrix:
          define(stmt.name, stmt.pos,
                 Binding{std::nullopt, AdmissibleMatrix(stmt.rows, stmt.col_map)});
          break;
        case Stmt::Kind::Show: shown.push_back(eval_expr(*stmt.expr)); break;
      }
    }
    return shown;
  }

private:
  std::map<std::string, Binding, std::less<>> env_;

  void define(const std::string& name, SourcePos pos, Binding binding) {
    if (env_.contains(name))
      throw NameError(pos, "name '" + name + "' is already defined");
    env_.emplace(name, std::move(binding));
  }

  const Binding& lookup(const std::string& name, SourcePos pos) {
    const auto it = env_.find(name);
    if (it == env_.end()) throw NameError(pos, "undefined name '" + name + "'");
    return it->second;
  }

  Proposition as_proposition(const Expr& e, const char* what) {
    Value v = eval_expr(e);
    if (const auto* p = std::get_if<Proposition>(&v)) return *p;
    throw ShapeError(e.pos, std::string(what) + " must be a proposition");
  }

  Value eval_expr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal: {
        try {
          return Proposition(e.literal);
        } catch (const Error& err) {
          throw EvalError(e.pos, err.what());
        }
      }
      case Expr::Kind::Ident: {
        const Binding& b = lookup(e.name, e.pos);
        if (!b.value)
          throw ShapeError(e.pos, "matrix '" + e.name + "' used as a value");
        return *b.value;
      }
      case Expr::Kind::Not: {
        const Proposition p = as_proposition(*e.args[0], "operand of 'not'");
        if (p.size() == 4) return negation4(p);
        if (p.size() == 2) return not2(p);
        throw ShapeError(e.pos, "'not' needs a 2- or 4-outcome operand, got " +
                                    std::to_string(p.size()));
      }
      case Expr::Kind::And:
      case Expr::Kind::Or: {
        const char* label = e.kind == Expr::Kind::And ? "'and'" : "'or'";
        const Proposition lhs =
            as_proposition(*e.args[0], (std::string("left operand of ") + label).c_str());
        const Proposition rhs =
            as_proposition(*e.args[1], (std::string("right operand of ") + label).c_str());
        if (lhs.size() != rhs.size() || (lhs.size() != 2 && lhs.size() != 4))
          throw ShapeError(e.pos, std::string(label) +
                                      " needs two 2- or two 4-outcome operands, got " +
                                      std::to_string(lhs.size()) + " and " +
                                      std::to_string(rhs.size()));
        if (e.kind == Expr::Kind::And)
          return lhs.size() == 4 ? conjunction4(lhs, rhs) : and2(lhs, rhs);
        return lhs.size() == 4 ? disjunction4(lhs, rhs) : or2(lhs, rhs);
      }
      case Expr::Kind::Tensor: {
        const Proposition lhs = as_proposition(*e.args[0], "first operand of tensor");
        const Proposition rhs = as_proposition(*e.args[1], "second operand of tensor");
        return tensor(lhs, rhs);
      }
      case Expr::Kind::Proj1:
      case Expr::Kind::Proj2: {
        const char* name = e.kind == Expr::Kind::Proj1 ? "proj1" : "proj2";
        const Proposition p =
            as_proposition(*e.args[0], (std::string("operand of ") + name).c_str());
        if (p.size() != 4)
          throw ShapeError(e.pos, std::string(name) +
                                      " needs a 4-outcome operand, got " +
                                      std::to_string(p.size()));
        const BipartiteShape shape{2, 2};
        return e.kind == Expr::Kind::Proj1 ? marginal_first(p, shape)
                                           : marginal_second(p, shape);
      }
      case Expr::Kind::Context: {
        const Proposition p = as_proposition(*e.args[0], "operand of context");
        if (p.size() != 4)
          throw ShapeError(e.pos, "context needs a 4-outcome operand, got " +
                                      std::to_string(p.size()));
        return context(p);
      }
      case Expr::Kind::Dist: {
        const Proposition lhs = as_proposition(*e.args[0], "first operand of dist");
        const Proposition rhs = as_proposition(*e.args[1], "second operand of dist");
        if (lhs.size() != rhs.size())
          throw ShapeError(e.pos, "dist needs equal outcome counts, got " +
                                      std::to_string(lhs.size()) + " and " +
                                      std::to_string(rhs.size()));
        return distance(lhs, rhs);
      }
      case Expr::Kind::Apply: {
        const Binding& b = lookup(e.name, e.pos);
        if (!b.matrix)
          throw ShapeError(e.pos, "'" + e.name + "' is not a matrix");
        const Proposition p = as_proposition(*e.args[0], "operand of apply");
        if (b.matrix->cols() != p.size())
          throw ShapeError(e.pos, "matrix '" + e.name + "' has " +
                                      std::to_string(b.matrix->cols()) +
                                      " columns, operand has " +
                                      std::to_string(p.size()) + " outcomes");
        return apply(*b.matrix, p);
      }
      case Expr::Kind::Decompose: {
        const Proposition p = as_proposition(*e.args[0], "operand of decompose");
        if (p.size() != 4)
          throw ShapeError(e.pos, "decompose needs a 4-outcome operand, got " +
                                      std::to_string(p.size()));
        try {
          return decompose(p);
        } catch (const Error& err) {
          throw EvalError(e.pos, err.what());
        }
      }
    }
    throw EvalError(e.pos, "internal: unknown expression kind");
  }
};

} // namespace

std::vector<Value> eval(const Script& script) { return Evaluator().run(script); }

} // namespace cld::dsl
