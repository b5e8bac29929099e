#include "superint/parser.hpp"

#include <cctype>

namespace superint {

namespace {

struct Token {
  enum class Type { Number, Identifier, Symbol, End };
  Type type = Type::End;
  std::string text;
  std::size_t position = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      out.push_back({Token::Type::Number, std::string(text.substr(start, k - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = k;
      while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
      out.push_back({Token::Type::Identifier, std::string(text.substr(start, k - start)), start});
    } else if (std::string_view("+-*/^(){},").find(c) != std::string_view::npos) {
      out.push_back({Token::Type::Symbol, std::string(1, c), k});
      ++k;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", k);
    }
  }
  out.push_back({Token::Type::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SyntaxNode parseAll() {
    SyntaxNode n = expr();
    if (peek().type != Token::Type::End) throw ParseError("unexpected '" + peek().text + "'", peek().position);
    return n;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool isSymbol(const char* s) const { return peek().type == Token::Type::Symbol && peek().text == s; }
  Token take() { return tokens_[pos_++]; }
  void expect(const char* s) {
    if (!isSymbol(s)) {
      const std::string found = peek().type == Token::Type::End ? "end of input" : "'" + peek().text + "'";
      throw ParseError(std::string("expected '") + s + "' but found " + found, peek().position);
    }
    ++pos_;
  }

  static SyntaxNode binary(SyntaxNode::Kind kind, std::size_t position, SyntaxNode a, SyntaxNode b) {
    SyntaxNode n;
    n.kind = kind;
    n.position = position;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
  }

  SyntaxNode expr() {
    SyntaxNode left;
    if (isSymbol("-")) {
      const std::size_t p = take().position;
      SyntaxNode n;
      n.kind = SyntaxNode::Kind::Neg;
      n.position = p;
      n.children.push_back(term());
      left = std::move(n);
    } else {
      left = term();
    }
    while (isSymbol("+") || isSymbol("-")) {
      const Token op = take();
      left = binary(op.text == "+" ? SyntaxNode::Kind::Add : SyntaxNode::Kind::Sub, op.position, std::move(left),
                    term());
    }
    return left;
  }

  SyntaxNode term() {
    SyntaxNode left = factor();
    while (isSymbol("*") || isSymbol("/")) {
      const Token op = take();
      left = binary(op.text == "*" ? SyntaxNode::Kind::Mul : SyntaxNode::Kind::Div, op.position, std::move(left),
                    factor());
    }
    return left;
  }

  SyntaxNode factor() {
    SyntaxNode b = base();
    if (isSymbol("^")) {
      const std::size_t p = take().position;
      SyntaxNode n;
      n.kind = SyntaxNode::Kind::Pow;
      n.position = p;
      n.number = exponent();
      n.children.push_back(std::move(b));
      return n;
    }
    return b;
  }

  Rational signedInteger() {
    bool negative = false;
    if (isSymbol("-")) {
      take();
      negative = true;
    }
    if (peek().type != Token::Type::Number) throw ParseError("expected integer exponent", peek().position);
    Rational v = Rational::fromString(take().text);
    return negative ? -v : v;
  }

  Rational exponent() {
    if (isSymbol("(")) {
      take();
      Rational num = signedInteger();
      if (isSymbol("/")) {
        take();
        const std::size_t p = peek().position;
        Rational den = signedInteger();
        if (den.isZero()) throw ParseError("zero denominator in exponent", p);
        num /= den;
      }
      expect(")");
      return num;
    }
    return signedInteger();
  }

  SyntaxNode base() {
    const Token& t = peek();
    SyntaxNode n;
    n.position = t.position;
    switch (t.type) {
      case Token::Type::Number:
        n.kind = SyntaxNode::Kind::Number;
        n.number = Rational::fromString(take().text);
        return n;
      case Token::Type::Identifier:
        n.kind = SyntaxNode::Kind::Symbol;
        n.symbol = take().text;
        return n;
      case Token::Type::Symbol:
        if (t.text == "(") {
          take();
          SyntaxNode inner = expr();
          expect(")");
          return inner;
        }
        if (t.text == "{") {
          take();
          SyntaxNode a = expr();
          expect(",");
          SyntaxNode b = expr();
          expect("}");
          return binary(SyntaxNode::Kind::Anticommutator, n.position, std::move(a), std::move(b));
        }
        throw ParseError("unexpected '" + t.text + "'", t.position);
      case Token::Type::End:
        throw ParseError("unexpected end of input", t.position);
    }
    throw ParseError("unexpected token", t.position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxNode parseSyntax(std::string_view text) { return Parser(tokenize(text)).parseAll(); }

Expression parseExpression(std::string_view text) { return evaluateSyntax<Expression>(parseSyntax(text)); }

}  // namespace superint
