#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "bargmann/formal_symbol.hpp"
#include "bargmann/sampled_symbol.hpp"

namespace bargmann {

enum class NodeKind { number, imaginary_unit, variable, conj, re, im, sin, cos, exp, neg, add, sub, mul, div, pow };

struct AstNode;
using Ast = std::shared_ptr<const AstNode>;

/// Immutable expression node. Unary nodes use lhs only.
struct AstNode {
  NodeKind kind = NodeKind::number;
  std::string text;          // number literal as written
  mpq_class value;           // exact number value
  std::size_t index = 0;     // variable index, 1-based
  unsigned exponent = 0;     // pow exponent
  Ast lhs;
  Ast rhs;
};

/// Parsed symbol together with the dimension it was checked against.
struct SymbolAst {
  std::size_t n;
  Ast root;
};

/// Lexical or syntax error; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed text that is invalid for the declared dimension.
class SemanticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The symbol uses operations outside the polynomial subset.
class NotPolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" UINT)?
///   base   := NUMBER | "i" | "z" DIGITS | FUNC "(" expr ")" | "(" expr ")" | "-" factor
///   FUNC   := conj | re | im | sin | cos | exp
SymbolAst parse(const std::string& text, std::size_t n);

/// Fully parenthesized text that parses back to the same tree.
std::string to_string(const SymbolAst& ast);

bool structurally_equal(const Ast& a, const Ast& b);

/// Exact polynomial. re(e) = (e + conj e)/2, im(e) = (e - conj e)/(2i); division only by
/// constant subexpressions. Throws NotPolynomialError ("not a polynomial symbol").
FormalSymbol lower_formal(const SymbolAst& ast);

/// Tree interpreter with derivatives of every order obtained by differentiating the tree.
SampledSymbol lower_sampled(const SymbolAst& ast);

}  // namespace bargmann
