#ifndef CLD_DSL_HPP
#define CLD_DSL_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cld/admissible.hpp"
#include "cld/errors.hpp"
#include "cld/proposition.hpp"
#include "cld/rational.hpp"

namespace cld::dsl {

// 1-based position in the original source.
struct SourcePos {
  int line = 1;
  int col = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Every script error carries the position it was detected at.
class ScriptError : public Error {
public:
  ScriptError(std::string kind, SourcePos pos, const std::string& msg)
      : Error(kind + " at " + std::to_string(pos.line) + ":" +
              std::to_string(pos.col) + ": " + msg),
        kind_(std::move(kind)),
        pos_(pos) {}

  const std::string& kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

private:
  std::string kind_;
  SourcePos pos_;
};

struct LexError : ScriptError {
  LexError(SourcePos pos, const std::string& msg)
      : ScriptError("LexError", pos, msg) {}
};
struct ParseError : ScriptError {
  ParseError(SourcePos pos, const std::string& msg)
      : ScriptError("ParseError", pos, msg) {}
};
struct NameError : ScriptError {
  NameError(SourcePos pos, const std::string& msg)
      : ScriptError("NameError", pos, msg) {}
};
struct ShapeError : ScriptError {
  ShapeError(SourcePos pos, const std::string& msg)
      : ScriptError("ShapeError", pos, msg) {}
};
struct EvalError : ScriptError {
  EvalError(SourcePos pos, const std::string& msg)
      : ScriptError("EvalError", pos, msg) {}
};

enum class TokenType {
  Int,
  Ident,
  KwLet,
  KwMatrix,
  KwShow,
  KwNot,
  KwAnd,
  KwOr,
  KwTensor,
  KwProj1,
  KwProj2,
  KwContext,
  KwDist,
  KwApply,
  KwDecompose,
  KwX,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Semi,
  Eq,
  Slash,
  End,
};

struct Token {
  TokenType type;
  std::string text;
  SourcePos pos;
};

// Splits source into tokens; skips whitespace and '#'-to-end-of-line
// comments. Throws LexError on an illegal character.
std::vector<Token> tokenize(std::string_view source);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind {
    Literal,   // rational vector
    Ident,     // name reference
    Not,       // args[0]
    And,       // args[0], args[1]
    Or,        // args[0], args[1]
    Tensor,    // args[0], args[1]
    Proj1,     // args[0]
    Proj2,     // args[0]
    Context,   // args[0]
    Dist,      // args[0], args[1]
    Apply,     // name = matrix identifier, args[0]
    Decompose, // args[0]
  };

  Kind kind;
  SourcePos pos;
  std::vector<Rational> literal; // Kind::Literal
  std::string name;              // Kind::Ident, Kind::Apply
  std::vector<ExprPtr> args;
};

struct Stmt {
  enum class Kind { LetValue, LetMatrix, Show };

  Kind kind;
  SourcePos pos;
  std::string name;         // LetValue, LetMatrix
  ExprPtr expr;             // LetValue, Show
  int rows = 0;             // LetMatrix
  std::vector<int> col_map; // LetMatrix, 1-based entries
};

struct Script {
  std::vector<Stmt> stmts;
};

// Recursive-descent parse; precedence not > and > or, and/or left
// associative. The matrix-literal selector invariant (declared column count
// and row range) is enforced here. Throws ParseError with position.
Script parse(const std::vector<Token>& tokens);
Script parse(std::string_view source);

// Canonical source form; parse(pretty_print(s)) pretty-prints to the same
// text (rationals are emitted in lowest terms).
std::string pretty_print(const Script& script);

// Results: context/dist yield scalars, decompose yields a pair, everything
// else a proposition.
using Value = std::variant<Rational, Proposition, std::pair<Proposition, Proposition>>;

// "1/8" | "[3/8, 1/8, 1/8, 3/8]" | "([1, 0], [1/2, 1/2])"
std::string format_value(const Value& v);

// Evaluates statements in order and returns one Value per show. Connectives
// dispatch on operand length (4-valued vs 2-valued); mixed lengths are a
// ShapeError, not a coercion. Names are unique per script and must be
// defined before use. The built-in connective selectors are predefined as
// matrices named not4, and4, or4, not2, and2, or2 (e.g. apply(and4, ...)).
std::vector<Value> eval(const Script& script);

} // namespace cld::dsl

#endif
