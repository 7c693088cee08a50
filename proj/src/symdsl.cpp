#include "bargmann/symdsl.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "bargmann/detail/ipow.hpp"
#include "bargmann/gaussian_rational.hpp"

namespace bargmann {

namespace {

using cd = std::complex<double>;

constexpr unsigned kMaxExponent = 64;

Ast make(AstNode node) { return std::make_shared<const AstNode>(std::move(node)); }

AstNode node_of(NodeKind kind) {
  AstNode node;
  node.kind = kind;
  return node;
}

Ast number(const mpq_class& v, std::string text = {}) {
  AstNode node = node_of(NodeKind::number);
  node.value = v;
  node.text = text.empty() ? v.get_str() : std::move(text);
  return make(std::move(node));
}

Ast unary(NodeKind kind, Ast operand) {
  AstNode node = node_of(kind);
  node.lhs = std::move(operand);
  return make(std::move(node));
}

Ast binary(NodeKind kind, Ast lhs, Ast rhs) {
  AstNode node = node_of(kind);
  node.lhs = std::move(lhs);
  node.rhs = std::move(rhs);
  return make(std::move(node));
}

Ast power(Ast base, unsigned k) {
  AstNode node = node_of(NodeKind::pow);
  node.lhs = std::move(base);
  node.exponent = k;
  return make(std::move(node));
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(const std::string& text, std::size_t n) : text_(text), n_(n) {}

  Ast parse_all() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Ast e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) throw ParseError(std::string("expected '") + c + "' at end of input", pos_);
      throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
    }
  }

  Ast expr() {
    Ast lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(NodeKind::add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(NodeKind::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Ast term() {
    Ast lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = binary(NodeKind::mul, lhs, factor());
      } else if (accept('/')) {
        lhs = binary(NodeKind::div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Ast factor() {
    Ast b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected a nonnegative integer exponent after '^'", start);
      if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) {
        throw ParseError("exponent larger than " + std::to_string(kMaxExponent), start);
      }
      b = power(b, static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  Ast base() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return unary(NodeKind::neg, factor());
    }
    if (c == '(') {
      ++pos_;
      Ast e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Ast number_literal() {
    const std::size_t start = pos_;
    std::string text = read_digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      text += text_[pos_++];
      text += read_digits();
    }
    if (text == ".") throw ParseError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      std::string exp(1, text_[pos_++]);
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) exp += text_[pos_++];
      std::string digits = read_digits();
      if (digits.empty()) {
        pos_ = save;  // a trailing 'e' is not part of the number
      } else {
        text += exp + digits;
      }
    }
    try {
      return number(rational_from_decimal(text), text);
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + text + "'", start);
    }
  }

  Ast word() {
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
    if (name == "z") {
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("variable 'z' needs an index, as in z1", start);
      const unsigned long j = digits.size() > 6 ? 0 : std::stoul(digits);
      if (j < 1 || j > n_) {
        throw SemanticError("index out of range: z" + digits + " with dimension " + std::to_string(n_));
      }
      AstNode node = node_of(NodeKind::variable);
      node.index = j;
      return make(std::move(node));
    }
    if (name == "i") return make(node_of(NodeKind::imaginary_unit));
    NodeKind kind;
    if (name == "conj") {
      kind = NodeKind::conj;
    } else if (name == "re") {
      kind = NodeKind::re;
    } else if (name == "im") {
      kind = NodeKind::im;
    } else if (name == "sin") {
      kind = NodeKind::sin;
    } else if (name == "cos") {
      kind = NodeKind::cos;
    } else if (name == "exp") {
      kind = NodeKind::exp;
    } else {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    expect('(');
    Ast arg = expr();
    expect(')');
    return unary(kind, arg);
  }

  const std::string& text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------- printer

const char* function_name(NodeKind k) {
  switch (k) {
    case NodeKind::conj: return "conj";
    case NodeKind::re: return "re";
    case NodeKind::im: return "im";
    case NodeKind::sin: return "sin";
    case NodeKind::cos: return "cos";
    case NodeKind::exp: return "exp";
    default: return nullptr;
  }
}

char operator_char(NodeKind k) {
  switch (k) {
    case NodeKind::add: return '+';
    case NodeKind::sub: return '-';
    case NodeKind::mul: return '*';
    case NodeKind::div: return '/';
    default: return '?';
  }
}

void print(const Ast& a, std::string& out) {
  switch (a->kind) {
    case NodeKind::number: out += a->text; return;
    case NodeKind::imaginary_unit: out += 'i'; return;
    case NodeKind::variable: out += "z" + std::to_string(a->index); return;
    case NodeKind::neg:
      out += "(-";
      print(a->lhs, out);
      out += ')';
      return;
    case NodeKind::pow:
      out += '(';
      print(a->lhs, out);
      out += '^' + std::to_string(a->exponent) + ')';
      return;
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div:
      out += '(';
      print(a->lhs, out);
      out += ' ';
      out += operator_char(a->kind);
      out += ' ';
      print(a->rhs, out);
      out += ')';
      return;
    default:
      out += function_name(a->kind);
      out += '(';
      print(a->lhs, out);
      out += ')';
      return;
  }
}

// ------------------------------------------------------- formal lowering

FormalSymbol lower(const Ast& a, std::size_t n) {
  switch (a->kind) {
    case NodeKind::number: return FormalSymbol::constant(n, GaussianRational(a->value));
    case NodeKind::imaginary_unit: return FormalSymbol::constant(n, GaussianRational::i());
    case NodeKind::variable: return FormalSymbol::z(n, a->index - 1);
    case NodeKind::conj: return conjugate(lower(a->lhs, n));
    case NodeKind::re: {
      FormalSymbol e = lower(a->lhs, n);
      return (e + conjugate(e)) * GaussianRational(mpq_class(1, 2));
    }
    case NodeKind::im: {
      FormalSymbol e = lower(a->lhs, n);
      return (e - conjugate(e)) * GaussianRational(0, mpq_class(-1, 2));
    }
    case NodeKind::neg: return -lower(a->lhs, n);
    case NodeKind::add: return lower(a->lhs, n) + lower(a->rhs, n);
    case NodeKind::sub: return lower(a->lhs, n) - lower(a->rhs, n);
    case NodeKind::mul: return lower(a->lhs, n) * lower(a->rhs, n);
    case NodeKind::div: {
      FormalSymbol d = lower(a->rhs, n);
      if (d.degree() != 0 || d.has_s()) throw NotPolynomialError("not a polynomial symbol: division by a non-constant");
      const GaussianRational c = d.coefficient(Monomial{MultiIndex(n), MultiIndex(n), 0});
      if (c.is_zero()) throw NotPolynomialError("not a polynomial symbol: division by zero");
      return lower(a->lhs, n) * (GaussianRational(1) / c);
    }
    case NodeKind::pow: {
      FormalSymbol b = lower(a->lhs, n);
      FormalSymbol r = FormalSymbol::constant(n, GaussianRational(1));
      for (unsigned k = 0; k < a->exponent; ++k) r = r * b;
      return r;
    }
    case NodeKind::sin:
    case NodeKind::cos:
    case NodeKind::exp:
      throw NotPolynomialError(std::string("not a polynomial symbol: ") + function_name(a->kind));
  }
  throw std::logic_error("lower_formal: unknown node");
}

// ------------------------------------------- differentiation and folding

bool is_const(const Ast& a, long v) { return a->kind == NodeKind::number && a->value == v; }

Ast add(Ast a, Ast b) {
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  if (a->kind == NodeKind::number && b->kind == NodeKind::number) return number(a->value + b->value);
  return binary(NodeKind::add, a, b);
}

Ast sub(Ast a, Ast b) {
  if (is_const(b, 0)) return a;
  if (a->kind == NodeKind::number && b->kind == NodeKind::number) return number(a->value - b->value);
  if (is_const(a, 0)) return unary(NodeKind::neg, b);
  return binary(NodeKind::sub, a, b);
}

Ast mul(Ast a, Ast b) {
  if (is_const(a, 0) || is_const(b, 0)) return number(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  if (a->kind == NodeKind::number && b->kind == NodeKind::number) return number(a->value * b->value);
  return binary(NodeKind::mul, a, b);
}

Ast neg(Ast a) {
  if (a->kind == NodeKind::number) return number(-a->value);
  return unary(NodeKind::neg, a);
}

// d/dz_j (holomorphic) or d/dzbar_j (antiholomorphic) of the tree, j 1-based.
Ast differentiate(const Ast& a, std::size_t j, bool holomorphic) {
  switch (a->kind) {
    case NodeKind::number:
    case NodeKind::imaginary_unit: return number(0);
    case NodeKind::variable: return number(holomorphic && a->index == j ? 1 : 0);
    case NodeKind::conj: {
      Ast d = differentiate(a->lhs, j, !holomorphic);
      return is_const(d, 0) ? d : unary(NodeKind::conj, d);
    }
    case NodeKind::re:
    case NodeKind::im: {
      // re e = (e + conj e)/2 and im e = (e - conj e)/(2i).
      Ast de = differentiate(a->lhs, j, holomorphic);
      Ast dc = differentiate(a->lhs, j, !holomorphic);
      if (!is_const(dc, 0)) dc = unary(NodeKind::conj, dc);
      if (a->kind == NodeKind::re) return mul(number(mpq_class(1, 2)), add(de, dc));
      Ast half_over_i = mul(number(mpq_class(-1, 2)), make(node_of(NodeKind::imaginary_unit)));
      Ast diff = sub(de, dc);
      return is_const(diff, 0) ? diff : mul(half_over_i, diff);
    }
    case NodeKind::sin: return mul(unary(NodeKind::cos, a->lhs), differentiate(a->lhs, j, holomorphic));
    case NodeKind::cos: return mul(neg(unary(NodeKind::sin, a->lhs)), differentiate(a->lhs, j, holomorphic));
    case NodeKind::exp: return mul(a, differentiate(a->lhs, j, holomorphic));
    case NodeKind::neg: return neg(differentiate(a->lhs, j, holomorphic));
    case NodeKind::add: return add(differentiate(a->lhs, j, holomorphic), differentiate(a->rhs, j, holomorphic));
    case NodeKind::sub: return sub(differentiate(a->lhs, j, holomorphic), differentiate(a->rhs, j, holomorphic));
    case NodeKind::mul:
      return add(mul(differentiate(a->lhs, j, holomorphic), a->rhs), mul(a->lhs, differentiate(a->rhs, j, holomorphic)));
    case NodeKind::div: {
      Ast da = differentiate(a->lhs, j, holomorphic);
      Ast db = differentiate(a->rhs, j, holomorphic);
      if (is_const(db, 0)) return is_const(da, 0) ? da : binary(NodeKind::div, da, a->rhs);
      return binary(NodeKind::div, sub(mul(da, a->rhs), mul(a->lhs, db)), power(a->rhs, 2));
    }
    case NodeKind::pow: {
      if (a->exponent == 0) return number(0);
      Ast db = differentiate(a->lhs, j, holomorphic);
      if (is_const(db, 0)) return db;
      Ast lower_power = a->exponent == 1 ? number(1) : (a->exponent == 2 ? a->lhs : power(a->lhs, a->exponent - 1));
      return mul(mul(number(a->exponent), lower_power), db);
    }
  }
  throw std::logic_error("differentiate: unknown node");
}

cd eval(const AstNode& a, Point z) {
  switch (a.kind) {
    case NodeKind::number: return a.value.get_d();
    case NodeKind::imaginary_unit: return {0.0, 1.0};
    case NodeKind::variable: return z[a.index - 1];
    case NodeKind::conj: return std::conj(eval(*a.lhs, z));
    case NodeKind::re: return eval(*a.lhs, z).real();
    case NodeKind::im: return eval(*a.lhs, z).imag();
    case NodeKind::sin: return std::sin(eval(*a.lhs, z));
    case NodeKind::cos: return std::cos(eval(*a.lhs, z));
    case NodeKind::exp: return std::exp(eval(*a.lhs, z));
    case NodeKind::neg: return -eval(*a.lhs, z);
    case NodeKind::add: return eval(*a.lhs, z) + eval(*a.rhs, z);
    case NodeKind::sub: return eval(*a.lhs, z) - eval(*a.rhs, z);
    case NodeKind::mul: return eval(*a.lhs, z) * eval(*a.rhs, z);
    case NodeKind::div: return eval(*a.lhs, z) / eval(*a.rhs, z);
    case NodeKind::pow: return detail::ipow(eval(*a.lhs, z), static_cast<int>(a.exponent));
  }
  throw std::logic_error("evaluate: unknown node");
}

SymbolFunction evaluator(Ast a) {
  return [a = std::move(a)](Point z) { return eval(*a, z); };
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

SymbolAst parse(const std::string& text, std::size_t n) {
  if (n == 0) throw std::invalid_argument("parse: dimension must be >= 1");
  return SymbolAst{n, Parser(text, n).parse_all()};
}

std::string to_string(const SymbolAst& ast) {
  std::string out;
  print(ast.root, out);
  return out;
}

bool structurally_equal(const Ast& a, const Ast& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::number:
      if (a->value != b->value) return false;
      break;
    case NodeKind::variable:
      if (a->index != b->index) return false;
      break;
    case NodeKind::pow:
      if (a->exponent != b->exponent) return false;
      break;
    default:
      break;
  }
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

FormalSymbol lower_formal(const SymbolAst& ast) { return lower(ast.root, ast.n); }

SampledSymbol lower_sampled(const SymbolAst& ast) {
  const std::size_t n = ast.n;
  Ast root = ast.root;
  DerivativeProvider provider = [root, n](const MultiIndex& hol, const MultiIndex& antihol) -> std::optional<SymbolFunction> {
    Ast d = root;
    for (std::size_t j = 0; j < n; ++j) {
      for (int m = 0; m < hol[j]; ++m) d = differentiate(d, j + 1, true);
      for (int m = 0; m < antihol[j]; ++m) d = differentiate(d, j + 1, false);
    }
    return evaluator(d);
  };
  return SampledSymbol(n, evaluator(root), std::move(provider), std::nullopt, to_string(ast));
}

}  // namespace bargmann
