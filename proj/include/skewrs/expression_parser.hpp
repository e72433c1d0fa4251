#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewrs/errors.hpp"

namespace skewrs {

// Recursive-descent parser shared by all field backends.
//
// Element grammar (whitespace-insensitive, `*` optional between factors):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' exponent)?
//   primary := integer | symbol | '(' expr ')'
//
// In polynomial mode the skew variable may appear once per top-level term, as
// its rightmost factor (`c*x^k`); parenthesised groups are plain elements.
namespace detail {

enum class TokenKind { End, Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  std::size_t position = 0;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.position = pos_;
    if (pos_ >= text_.size()) {
      current_ = Token{TokenKind::End, {}, pos_};
      return;
    }
    const char c = text_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = Token{TokenKind::Integer, text_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = Token{TokenKind::Identifier, text_.substr(start, pos_ - start), start};
      return;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    ++pos_;
    current_ = Token{kind, text_.substr(start, 1), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace detail

template <class F>
class ExpressionParser {
 public:
  using Element = typename F::Element;

  /// Polynomial terms keyed by degree; duplicates are merged.
  using TermMap = std::map<long long, Element>;

  ExpressionParser(const F& field, std::string_view text, std::string_view skew_variable = {})
      : field_(field), tokens_(text), skew_variable_(skew_variable) {}

  Element parse_element() {
    Element value = parse_expr();
    expect_end();
    return value;
  }

  TermMap parse_polynomial() {
    TermMap terms;
    bool first = true;
    do {
      bool negate = false;
      const auto sign = tokens_.peek();
      if (sign.kind == detail::TokenKind::Minus) {
        tokens_.take();
        negate = true;
      } else if (sign.kind == detail::TokenKind::Plus) {
        tokens_.take();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", sign.position);
      }
      first = false;
      Term term = parse_term(/*allow_variable=*/true);
      Element coef = negate ? field_.neg(term.coef) : term.coef;
      auto [it, inserted] = terms.try_emplace(term.degree, coef);
      if (!inserted) it->second = field_.add(it->second, coef);
    } while (tokens_.peek().kind != detail::TokenKind::End);
    return terms;
  }

 private:
  struct Term {
    Element coef;
    long long degree = 0;
    bool has_variable = false;
  };

  void expect_end() {
    const auto& t = tokens_.peek();
    if (t.kind != detail::TokenKind::End)
      throw ParseError("unexpected trailing input '" + std::string(t.text) + "'", t.position);
  }

  Element parse_expr() {
    Element value = parse_term(false).coef;
    while (true) {
      const auto kind = tokens_.peek().kind;
      if (kind == detail::TokenKind::Plus) {
        tokens_.take();
        value = field_.add(value, parse_term(false).coef);
      } else if (kind == detail::TokenKind::Minus) {
        tokens_.take();
        value = field_.sub(value, parse_term(false).coef);
      } else {
        return value;
      }
    }
  }

  static bool starts_factor(detail::TokenKind kind) {
    return kind == detail::TokenKind::Integer || kind == detail::TokenKind::Identifier ||
           kind == detail::TokenKind::LParen;
  }

  Term parse_term(bool allow_variable) {
    Term acc = parse_unary(allow_variable);
    while (true) {
      const auto tok = tokens_.peek();
      bool divide = false;
      if (tok.kind == detail::TokenKind::Star) {
        tokens_.take();
      } else if (tok.kind == detail::TokenKind::Slash) {
        tokens_.take();
        divide = true;
      } else if (!starts_factor(tok.kind)) {
        return acc;
      }
      const auto factor_pos = tokens_.peek().position;
      Term rhs = parse_unary(allow_variable);
      if (acc.has_variable)
        throw ParseError("the skew variable must be the rightmost factor of a term", factor_pos);
      if (divide) {
        if (rhs.has_variable) throw ParseError("cannot divide by the skew variable", factor_pos);
        if (field_.is_zero(rhs.coef)) throw ParseError("division by zero", factor_pos);
        acc.coef = field_.div(acc.coef, rhs.coef);
      } else {
        acc.coef = field_.mul(acc.coef, rhs.coef);
        acc.degree = rhs.degree;
        acc.has_variable = rhs.has_variable;
      }
    }
  }

  Term parse_unary(bool allow_variable) {
    const auto tok = tokens_.peek();
    if (tok.kind == detail::TokenKind::Minus) {
      tokens_.take();
      Term t = parse_unary(allow_variable);
      t.coef = field_.neg(t.coef);
      return t;
    }
    if (tok.kind == detail::TokenKind::Plus) {
      tokens_.take();
      return parse_unary(allow_variable);
    }
    return parse_power(allow_variable);
  }

  long long parse_exponent() {
    bool paren = false;
    if (tokens_.peek().kind == detail::TokenKind::LParen) {
      tokens_.take();
      paren = true;
    }
    bool negative = false;
    if (tokens_.peek().kind == detail::TokenKind::Minus) {
      tokens_.take();
      negative = true;
    }
    const auto tok = tokens_.take();
    if (tok.kind != detail::TokenKind::Integer)
      throw ParseError("expected an integer exponent", tok.position);
    long long value = 0;
    for (char c : tok.text) {
      if (value > (std::numeric_limits<long long>::max() - 9) / 10)
        throw ParseError("exponent out of range", tok.position);
      value = value * 10 + (c - '0');
    }
    if (paren) {
      const auto close = tokens_.take();
      if (close.kind != detail::TokenKind::RParen) throw ParseError("expected ')'", close.position);
    }
    return negative ? -value : value;
  }

  Term parse_power(bool allow_variable) {
    Term base = parse_primary(allow_variable);
    if (tokens_.peek().kind != detail::TokenKind::Caret) return base;
    const auto caret = tokens_.take();
    const long long exponent = parse_exponent();
    if (base.has_variable) {
      if (exponent < 0) throw ParseError("negative power of the skew variable", caret.position);
      base.degree = exponent;
      return base;
    }
    if (exponent < 0 && field_.is_zero(base.coef))
      throw ParseError("division by zero", caret.position);
    base.coef = field_.pow(base.coef, exponent);
    return base;
  }

  Element integer_literal(std::string_view digits) {
    // Horner in chunks so arbitrarily long literals stay exact.
    Element value = field_.zero();
    const Element billion = field_.from_int(1000000000LL);
    std::size_t i = 0;
    const std::size_t head = digits.size() % 9 == 0 ? 9 : digits.size() % 9;
    long long chunk = 0;
    for (; i < head; ++i) chunk = chunk * 10 + (digits[i] - '0');
    value = field_.from_int(chunk);
    while (i < digits.size()) {
      chunk = 0;
      for (std::size_t j = 0; j < 9; ++j, ++i) chunk = chunk * 10 + (digits[i] - '0');
      value = field_.add(field_.mul(value, billion), field_.from_int(chunk));
    }
    return value;
  }

  Term parse_primary(bool allow_variable) {
    const auto tok = tokens_.take();
    switch (tok.kind) {
      case detail::TokenKind::Integer:
        return Term{integer_literal(tok.text), 0, false};
      case detail::TokenKind::Identifier: {
        if (!skew_variable_.empty() && tok.text == skew_variable_) {
          if (!allow_variable)
            throw ParseError("skew variable not allowed inside an element expression",
                             tok.position);
          return Term{field_.one(), 1, true};
        }
        auto symbol = field_.resolve_symbol(tok.text);
        if (!symbol) throw ParseError("unknown symbol '" + std::string(tok.text) + "'", tok.position);
        return Term{*symbol, 0, false};
      }
      case detail::TokenKind::LParen: {
        Element inner = parse_expr();
        const auto close = tokens_.take();
        if (close.kind != detail::TokenKind::RParen) throw ParseError("expected ')'", close.position);
        return Term{inner, 0, false};
      }
      case detail::TokenKind::End:
        throw ParseError("unexpected end of input", tok.position);
      default:
        throw ParseError("unexpected token '" + std::string(tok.text) + "'", tok.position);
    }
  }

  const F& field_;
  detail::Tokenizer tokens_;
  std::string_view skew_variable_;
};

/// Parses an element of `field` from text.
template <class F>
typename F::Element parse_element(const F& field, std::string_view text) {
  return ExpressionParser<F>(field, text).parse_element();
}

/// True when `s` can be used as a factor without parentheses.
inline bool is_atomic_text(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^')) return false;
  }
  return true;
}

}  // namespace skewrs
