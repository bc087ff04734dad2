#pragma once

// Recursive-descent parser for terms and statements. ASCII operators are
// canonical; the common math glyphs are accepted as aliases on input.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "resbinar/errors.hpp"
#include "resbinar/term.hpp"

namespace resbinar {
namespace detail {

enum class Tok { Ident, Star, Bslash, Slash, Caret, Vee, Eq, Leq, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // byte offset into the source
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t pos) {
    out.push_back({k, std::move(text), pos});
  };
  auto alias = [&](std::string_view glyph) {
    return src.substr(i, glyph.size()) == glyph;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '*': push(Tok::Star, "*", start); ++i; continue;
      case '\\': push(Tok::Bslash, "\\", start); ++i; continue;
      case '/': push(Tok::Slash, "/", start); ++i; continue;
      case '^': push(Tok::Caret, "^", start); ++i; continue;
      case '(': push(Tok::LParen, "(", start); ++i; continue;
      case ')': push(Tok::RParen, ")", start); ++i; continue;
      case '=': push(Tok::Eq, "=", start); ++i; continue;
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          push(Tok::Leq, "<=", start);
          i += 2;
          continue;
        }
        throw ParseError(ParseError::Kind::Syntax, start,
                         "unexpected character '<'");
      default:
        break;
    }
    if (alias("·")) { push(Tok::Star, "*", start); i += 2; continue; }
    if (alias("∧")) { push(Tok::Caret, "^", start); i += 3; continue; }
    if (alias("∨")) { push(Tok::Vee, "v", start); i += 3; continue; }
    if (alias("⊥")) { push(Tok::Ident, "bot", start); i += 3; continue; }
    if (alias("⊤")) { push(Tok::Ident, "top", start); i += 3; continue; }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string text(src.substr(i, j - i));
      const Tok kind = text == "v" ? Tok::Vee : Tok::Ident;
      push(kind, std::move(text), start);
      i = j;
      continue;
    }
    throw ParseError(ParseError::Kind::Syntax, start, "unexpected character");
  }
  push(Tok::End, "", src.size());
  return out;
}

inline bool is_operator_tok(Tok k) {
  return k == Tok::Star || k == Tok::Bslash || k == Tok::Slash ||
         k == Tok::Caret || k == Tok::Vee;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Statement statement() {
    Term lhs = expr();
    const Token& t = peek();
    Rel rel;
    if (t.kind == Tok::Eq) {
      rel = Rel::Eq;
    } else if (t.kind == Tok::Leq) {
      rel = Rel::Leq;
    } else if (t.kind == Tok::RParen) {
      throw ParseError(ParseError::Kind::UnbalancedParens, t.pos,
                       "unmatched ')'");
    } else {
      throw ParseError(ParseError::Kind::Syntax, t.pos,
                       "expected '=' or '<='");
    }
    ++idx_;
    Term rhs = expr();
    expect_end();
    return {std::move(lhs), rel, std::move(rhs)};
  }

  Term term_only() {
    Term t = expr();
    expect_end();
    return t;
  }

 private:
  void expect_end() {
    const Token& t = peek();
    if (t.kind == Tok::End) return;
    if (t.kind == Tok::RParen)
      throw ParseError(ParseError::Kind::UnbalancedParens, t.pos,
                       "unmatched ')'");
    throw ParseError(ParseError::Kind::Syntax, t.pos, "trailing input");
  }

  Term expr() {
    Term acc = div_tier();
    while (peek().kind == Tok::Caret || peek().kind == Tok::Vee) {
      const Tok op = peek().kind;
      ++idx_;
      Term rhs = div_tier();
      acc = op == Tok::Caret ? term::meet(std::move(acc), std::move(rhs))
                             : term::join(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Term div_tier() {
    Term acc = prod_tier();
    while (peek().kind == Tok::Bslash || peek().kind == Tok::Slash) {
      const Tok op = peek().kind;
      ++idx_;
      Term rhs = prod_tier();
      acc = op == Tok::Bslash ? term::ldiv(std::move(acc), std::move(rhs))
                              : term::rdiv(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Term prod_tier() {
    Term acc = atom();
    while (peek().kind == Tok::Star) {
      ++idx_;
      acc = term::prod(std::move(acc), atom());
    }
    return acc;
  }

  Term atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ++idx_;
        if (t.text == "e") return term::e();
        if (t.text == "bot") return term::bot();
        if (t.text == "top") return term::top();
        return term::var(t.text);
      }
      case Tok::LParen: {
        ++idx_;
        Term inner = expr();
        if (peek().kind != Tok::RParen)
          throw ParseError(ParseError::Kind::UnbalancedParens, peek().pos,
                           "expected ')'");
        ++idx_;
        return inner;
      }
      case Tok::RParen:
        throw ParseError(ParseError::Kind::UnbalancedParens, t.pos,
                         "unmatched ')'");
      default:
        if (is_operator_tok(t.kind) && idx_ > 0 &&
            is_operator_tok(toks_[idx_ - 1].kind))
          throw ParseError(ParseError::Kind::AdjacentOperators, t.pos,
                           "two operators in a row");
        throw ParseError(ParseError::Kind::Syntax, t.pos,
                         "expected a term");
    }
  }

  const Token& peek() const { return toks_[idx_]; }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view src) {
  return detail::Parser(src).term_only();
}

inline Statement parse_statement(std::string_view src) {
  return detail::Parser(src).statement();
}

}  // namespace resbinar
