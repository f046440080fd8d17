#ifndef WRONSK_EXPRESSION_HPP
#define WRONSK_EXPRESSION_HPP

#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "wronsk/errors.hpp"

namespace wronsk {

/// Parsed arithmetic expression in the single variable x.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func   := exp | cosh | sinh | tanh | sech | abs
///
/// '^' is right-associative and binds tighter than unary minus,
/// so -x^2 parses as -(x^2).
class Expr {
public:
  enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Func };

  Kind kind;
  double number = 0.0;       // Kind::Number
  std::string func;          // Kind::Func
  std::unique_ptr<Expr> a;   // unary operand / left operand
  std::unique_ptr<Expr> b;   // right operand

  double eval(double x) const {
    switch (kind) {
      case Kind::Number: return number;
      case Kind::Var:    return x;
      case Kind::Neg:    return -a->eval(x);
      case Kind::Add:    return a->eval(x) + b->eval(x);
      case Kind::Sub:    return a->eval(x) - b->eval(x);
      case Kind::Mul:    return a->eval(x) * b->eval(x);
      case Kind::Div:    return a->eval(x) / b->eval(x);
      case Kind::Pow:    return std::pow(a->eval(x), b->eval(x));
      case Kind::Func: {
        const double v = a->eval(x);
        if (func == "exp")  return std::exp(v);
        if (func == "cosh") return std::cosh(v);
        if (func == "sinh") return std::sinh(v);
        if (func == "tanh") return std::tanh(v);
        if (func == "sech") return 1.0 / std::cosh(v);
        return std::fabs(v);  // abs
      }
    }
    return 0.0;  // unreachable
  }

  /// Fully parenthesized source form; parsing it back yields an
  /// expression that evaluates identically.
  std::string str() const {
    switch (kind) {
      case Kind::Number: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", number);
        return buf;
      }
      case Kind::Var: return "x";
      case Kind::Neg: return "(-" + a->str() + ")";
      case Kind::Add: return "(" + a->str() + "+" + b->str() + ")";
      case Kind::Sub: return "(" + a->str() + "-" + b->str() + ")";
      case Kind::Mul: return "(" + a->str() + "*" + b->str() + ")";
      case Kind::Div: return "(" + a->str() + "/" + b->str() + ")";
      case Kind::Pow: return "(" + a->str() + "^" + b->str() + ")";
      case Kind::Func: return func + "(" + a->str() + ")";
    }
    return "";  // unreachable
  }
};

using ExprPtr = std::unique_ptr<Expr>;

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  static ExprPtr make(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  ExprPtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        auto e = make(Expr::Kind::Add);
        e->a = std::move(lhs);
        e->b = parse_term();
        lhs = std::move(e);
      } else if (eat('-')) {
        auto e = make(Expr::Kind::Sub);
        e->a = std::move(lhs);
        e->b = parse_term();
        lhs = std::move(e);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    auto lhs = parse_factor();
    for (;;) {
      if (eat('*')) {
        auto e = make(Expr::Kind::Mul);
        e->a = std::move(lhs);
        e->b = parse_factor();
        lhs = std::move(e);
      } else if (eat('/')) {
        auto e = make(Expr::Kind::Div);
        e->a = std::move(lhs);
        e->b = parse_factor();
        lhs = std::move(e);
      } else {
        return lhs;
      }
    }
  }

  // unary minus binds looser than '^'
  ExprPtr parse_factor() {
    if (eat('-')) {
      auto e = make(Expr::Kind::Neg);
      e->a = parse_factor();
      return e;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    auto base = parse_atom();
    if (eat('^')) {
      auto e = make(Expr::Kind::Pow);
      e->a = std::move(base);
      e->b = parse_factor();  // right-associative, exponent may carry a sign
      return e;
    }
    return base;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = src_[pos_];

    if (c == '(') {
      ++pos_;
      auto e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprPtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belonged to something else; not part of the number
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text == ".") throw ParseError("malformed number", start);
    auto e = make(Expr::Kind::Number);
    e->number = std::strtod(text.c_str(), nullptr);
    return e;
  }

  ExprPtr parse_name() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (name == "x") {
      return make(Expr::Kind::Var);
    }
    if (name == "exp" || name == "cosh" || name == "sinh" || name == "tanh" ||
        name == "sech" || name == "abs") {
      if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
      auto e = make(Expr::Kind::Func);
      e->func = name;
      e->a = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

}  // namespace detail

/// Parse an expression in the variable x. Throws ParseError on bad input.
inline ExprPtr parse_expression(std::string_view src) {
  return detail::ExprParser(src).parse();
}

}  // namespace wronsk

#endif
