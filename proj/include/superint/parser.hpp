#ifndef SUPERINT_PARSER_HPP
#define SUPERINT_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superint/errors.hpp"
#include "superint/expression.hpp"

namespace superint {

/// Syntax tree produced by the recursive-descent front end. The grammar is
///
///   expr     := ['-'] term { ('+'|'-') term }
///   term     := factor { ('*'|'/') factor }
///   factor   := base [ '^' exponent ]
///   base     := integer | identifier | '(' expr ')' | '{' expr ',' expr '}'
///   exponent := ['-'] integer | '(' ['-'] integer [ '/' integer ] ')'
///
/// '{a, b}' is the anticommutator a*b + b*a. Identifiers are resolved by the
/// target algebra, so the same tree evaluates to an Expression, a
/// PhasePolynomial or a WeylOperator.
struct SyntaxNode {
  enum class Kind { Number, Symbol, Add, Sub, Neg, Mul, Div, Pow, Anticommutator };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  Rational number;  // Number literal, or the exponent of Pow
  std::string symbol;
  std::vector<SyntaxNode> children;
};

SyntaxNode parseSyntax(std::string_view text);

/// Hooks an algebra provides to be a parse target.
template <class T>
struct ParseAlgebra;

template <>
struct ParseAlgebra<Expression> {
  static Expression fromScalar(Expression e) { return e; }
  static std::optional<Expression> toScalar(const Expression& e) { return e; }
  static Expression multiply(const Expression& a, const Expression& b) { return a * b; }
  static std::optional<Expression> symbol(const std::string&) { return std::nullopt; }
};

namespace detail {

inline std::optional<Expression> scalarSymbol(const std::string& name) {
  if (name == "x") return Expression::x();
  if (name == "y") return Expression::y();
  if (name == "alpha") return Expression::alpha();
  if (name == "hbar") return Expression::hbar();
  if (name == "i") return Expression::i();
  return std::nullopt;
}

}  // namespace detail

template <class T>
T evaluateSyntax(const SyntaxNode& node) {
  using A = ParseAlgebra<T>;
  using Kind = SyntaxNode::Kind;
  switch (node.kind) {
    case Kind::Number:
      return A::fromScalar(Expression(node.number));
    case Kind::Symbol: {
      if (auto s = detail::scalarSymbol(node.symbol)) return A::fromScalar(*s);
      if (auto v = A::symbol(node.symbol)) return *v;
      throw ParseError("unknown symbol '" + node.symbol + "'", node.position);
    }
    case Kind::Add:
      return evaluateSyntax<T>(node.children[0]) + evaluateSyntax<T>(node.children[1]);
    case Kind::Sub:
      return evaluateSyntax<T>(node.children[0]) - evaluateSyntax<T>(node.children[1]);
    case Kind::Neg:
      return -evaluateSyntax<T>(node.children[0]);
    case Kind::Mul:
      return A::multiply(evaluateSyntax<T>(node.children[0]), evaluateSyntax<T>(node.children[1]));
    case Kind::Anticommutator: {
      T a = evaluateSyntax<T>(node.children[0]);
      T b = evaluateSyntax<T>(node.children[1]);
      return A::multiply(a, b) + A::multiply(b, a);
    }
    case Kind::Div: {
      T num = evaluateSyntax<T>(node.children[0]);
      auto den = A::toScalar(evaluateSyntax<T>(node.children[1]));
      if (!den) throw ParseError("divisor must be a scalar expression", node.children[1].position);
      if (den->isZero()) throw ParseError("division by zero", node.children[1].position);
      try {
        return A::multiply(num, A::fromScalar(Expression(1) / *den));
      } catch (const AlgebraError& e) {
        throw ParseError(e.what(), node.children[1].position);
      }
    }
    case Kind::Pow: {
      T base = evaluateSyntax<T>(node.children[0]);
      const Rational& e = node.number;
      if (e.isInteger() && e.sign() >= 0) {
        T result = A::fromScalar(Expression(1));
        for (long j = 0; j < e.toLong(); ++j) result = A::multiply(result, base);
        return result;
      }
      auto s = A::toScalar(base);
      if (!s) throw ParseError("negative or fractional power of a non-scalar", node.position);
      try {
        return A::fromScalar(s->pow(e));
      } catch (const AlgebraError& err) {
        throw ParseError(err.what(), node.position);
      } catch (const std::domain_error& err) {
        throw ParseError(err.what(), node.position);
      }
    }
  }
  throw ParseError("corrupt syntax tree", node.position);
}

/// Parses the scalar grammar (atoms x, y, alpha, hbar, i).
Expression parseExpression(std::string_view text);

}  // namespace superint

#endif  // SUPERINT_PARSER_HPP
