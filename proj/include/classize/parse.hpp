#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "classize/errors.hpp"
#include "classize/formula.hpp"
#include "classize/periodic_set.hpp"

namespace classize {

// Concrete syntax shared by the CLI and the tests.
//
// Set expressions:
//   set  := "N" | "empty" | "M(" nat "," nat ")" | "{" nat ("," nat)* "}"
//         | set "+" set | set "&" set | set "\" set | "~" set | "(" set ")"
//   precedence: ~ > & > \ > + ; binary operators associate left.
//
// Formulas:
//   quantifiers "all v (...)" and "some v (...)"; connectives
//   "!", "&", "|", "->", "<->" (loosest last); atoms "t sub u", "t < u",
//   "t > u" (rewritten to "u < t"), "t ~ u", "t = u", "atom(t)",
//   "unit(t)", "sum(t,u,v)", "indisc(t,u)".  Terms are set expressions
//   extended with "I", "0" and variables.  Free variables are allowed.

namespace detail {

struct Token {
  enum class Kind {
    Ident, Number,
    LParen, RParen, LBrace, RBrace, Comma,
    Plus, Amp, Backslash, Tilde, Bang, Pipe, Arrow, DArrow,
    Less, Greater, Equal, Zero, End,
  };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) {
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int l, int c) {
      tokens_.push_back({k, std::move(text), l, c});
    };
    while (i < src.size()) {
      char c = src[i];
      int l = line, co = col;
      auto advance = [&](size_t n) {
        for (size_t j = 0; j < n; ++j) {
          if (src[i + j] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        i += n;
      };
      if (std::isspace((unsigned char)c)) {
        advance(1);
        continue;
      }
      if (std::isdigit((unsigned char)c)) {
        size_t j = i;
        while (j < src.size() && std::isdigit((unsigned char)src[j])) ++j;
        std::string num = src.substr(i, j - i);
        if (num == "0")
          push(Token::Kind::Zero, num, l, co);
        else
          push(Token::Kind::Number, num, l, co);
        advance(j - i);
        continue;
      }
      if (std::isalpha((unsigned char)c) || c == '_') {
        size_t j = i;
        while (j < src.size() &&
               (std::isalnum((unsigned char)src[j]) || src[j] == '_'))
          ++j;
        push(Token::Kind::Ident, src.substr(i, j - i), l, co);
        advance(j - i);
        continue;
      }
      switch (c) {
        case '(': push(Token::Kind::LParen, "(", l, co); advance(1); break;
        case ')': push(Token::Kind::RParen, ")", l, co); advance(1); break;
        case '{': push(Token::Kind::LBrace, "{", l, co); advance(1); break;
        case '}': push(Token::Kind::RBrace, "}", l, co); advance(1); break;
        case ',': push(Token::Kind::Comma, ",", l, co); advance(1); break;
        case '+': push(Token::Kind::Plus, "+", l, co); advance(1); break;
        case '&': push(Token::Kind::Amp, "&", l, co); advance(1); break;
        case '\\': push(Token::Kind::Backslash, "\\", l, co); advance(1); break;
        case '~': push(Token::Kind::Tilde, "~", l, co); advance(1); break;
        case '!': push(Token::Kind::Bang, "!", l, co); advance(1); break;
        case '|': push(Token::Kind::Pipe, "|", l, co); advance(1); break;
        case '=': push(Token::Kind::Equal, "=", l, co); advance(1); break;
        case '>': push(Token::Kind::Greater, ">", l, co); advance(1); break;
        case '<':
          if (i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
            push(Token::Kind::DArrow, "<->", l, co);
            advance(3);
          } else {
            push(Token::Kind::Less, "<", l, co);
            advance(1);
          }
          break;
        case '-':
          if (i + 1 < src.size() && src[i + 1] == '>') {
            push(Token::Kind::Arrow, "->", l, co);
            advance(2);
          } else {
            throw parse_error("unexpected '-'", l, co);
          }
          break;
        default:
          throw parse_error(std::string("unexpected character '") + c + "'",
                            l, co);
      }
    }
    tokens_.push_back({Token::Kind::End, "", line, col});
  }

  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  std::vector<Token> tokens_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lexer_(src) {}

  PeriodicSet parse_set() {
    TermPtr t = parse_term();
    expect_end();
    return ground_term_set(t);
  }

  FormulaPtr parse_formula() {
    FormulaPtr f = parse_iff();
    expect_end();
    return f;
  }

 private:
  // ---- formula grammar ----------------------------------------------------
  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    if (accept(Token::Kind::DArrow)) return f_iff(lhs, parse_iff());
    return lhs;
  }
  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (accept(Token::Kind::Arrow)) return f_implies(lhs, parse_implies());
    return lhs;
  }
  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (accept(Token::Kind::Pipe)) lhs = f_or(lhs, parse_and());
    return lhs;
  }
  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (accept(Token::Kind::Amp)) lhs = f_and(lhs, parse_unary());
    return lhs;
  }

  FormulaPtr parse_unary() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Bang) {
      next();
      return f_not(parse_unary());
    }
    if (tok.kind == Token::Kind::Ident &&
        (tok.text == "all" || tok.text == "some")) {
      next();
      const Token& v = peek();
      if (v.kind != Token::Kind::Ident || is_keyword(v.text))
        throw parse_error("expected variable after quantifier", v.line,
                          v.column);
      next();
      FormulaPtr body = parse_unary();
      return tok.text == "all" ? f_forall(v.text, body)
                               : f_exists(v.text, body);
    }
    if (tok.kind == Token::Kind::LParen) {
      // either a parenthesized formula or a parenthesized term opening
      // an atom; try the atom reading first and fall back
      size_t saved = pos_;
      try {
        return parse_atom();
      } catch (const parse_error&) {
        pos_ = saved;
      }
      next();  // consume '('
      FormulaPtr f = parse_iff();
      expect(Token::Kind::RParen, "expected ')'");
      return f;
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Ident) {
      if (tok.text == "atom" || tok.text == "unit") {
        next();
        expect(Token::Kind::LParen, "expected '('");
        TermPtr t = parse_term();
        expect(Token::Kind::RParen, "expected ')'");
        return tok.text == "atom" ? f_atom(t) : f_unit(t);
      }
      if (tok.text == "sum") {
        next();
        expect(Token::Kind::LParen, "expected '('");
        TermPtr a = parse_term();
        expect(Token::Kind::Comma, "expected ','");
        TermPtr b = parse_term();
        expect(Token::Kind::Comma, "expected ','");
        TermPtr c = parse_term();
        expect(Token::Kind::RParen, "expected ')'");
        return f_sum(a, b, c);
      }
      if (tok.text == "indisc") {
        next();
        expect(Token::Kind::LParen, "expected '('");
        TermPtr a = parse_term();
        expect(Token::Kind::Comma, "expected ','");
        TermPtr b = parse_term();
        expect(Token::Kind::RParen, "expected ')'");
        return expand_indisc(a, b);
      }
    }
    TermPtr lhs = parse_term();
    const Token& rel = peek();
    switch (rel.kind) {
      case Token::Kind::Less:
        next();
        return f_less(lhs, parse_term());
      case Token::Kind::Greater:
        next();
        return f_less(parse_term(), lhs);  // x > y is y < x
      case Token::Kind::Tilde:
        next();
        return f_samesize(lhs, parse_term());
      case Token::Kind::Equal:
        next();
        return f_equal(lhs, parse_term());
      case Token::Kind::Ident:
        if (rel.text == "sub") {
          next();
          return f_subset(lhs, parse_term());
        }
        [[fallthrough]];
      default:
        throw parse_error("expected a relation", rel.line, rel.column);
    }
  }

  static FormulaPtr expand_indisc(const TermPtr& a, const TermPtr& b) {
    std::string zv = "z";
    std::set<std::string> used;
    detail::term_vars(a, used);
    detail::term_vars(b, used);
    while (used.count(zv)) zv += "z";
    TermPtr z = Term::variable(zv);
    return f_forall(zv, f_and(f_iff(f_less(z, a), f_less(z, b)),
                              f_iff(f_less(a, z), f_less(b, z))));
  }

  // ---- term grammar -------------------------------------------------------
  TermPtr parse_term() {  // "+" level
    TermPtr lhs = parse_term_diff();
    while (accept(Token::Kind::Plus)) lhs = t_union(lhs, parse_term_diff());
    return lhs;
  }
  TermPtr parse_term_diff() {  // "\" level
    TermPtr lhs = parse_term_meet();
    while (accept(Token::Kind::Backslash))
      lhs = t_difference(lhs, parse_term_meet());
    return lhs;
  }
  TermPtr parse_term_meet() {  // "&" level
    TermPtr lhs = parse_term_unary();
    while (accept(Token::Kind::Amp)) lhs = t_intersect(lhs, parse_term_unary());
    return lhs;
  }
  TermPtr parse_term_unary() {
    if (accept(Token::Kind::Tilde)) {
      TermPtr t = parse_term_unary();
      // complement of a term: I \ t keeps the term algebra small
      return t_difference(Term::universe(), t);
    }
    return parse_term_primary();
  }

  TermPtr parse_term_primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::LParen: {
        next();
        TermPtr t = parse_term();
        expect(Token::Kind::RParen, "expected ')'");
        return t;
      }
      case Token::Kind::Zero:
        next();
        return Term::zero();
      case Token::Kind::LBrace: {
        next();
        std::vector<Nat> elements;
        if (!accept(Token::Kind::RBrace)) {
          elements.push_back(expect_nat());
          while (accept(Token::Kind::Comma)) elements.push_back(expect_nat());
          expect(Token::Kind::RBrace, "expected '}'");
        }
        return Term::named_set(PeriodicSet::finite(std::move(elements)));
      }
      case Token::Kind::Ident: {
        if (tok.text == "I") {
          next();
          return Term::universe();
        }
        if (tok.text == "N") {
          next();
          return Term::named_set(PeriodicSet::naturals());
        }
        if (tok.text == "empty") {
          next();
          return Term::named_set(PeriodicSet());
        }
        if (tok.text == "M") {
          next();
          expect(Token::Kind::LParen, "expected '(' after M");
          Nat n = expect_nat();
          expect(Token::Kind::Comma, "expected ','");
          Nat r = expect_nat();
          expect(Token::Kind::RParen, "expected ')'");
          return Term::named_set(PeriodicSet::congruence_class(n, r));
        }
        if (is_keyword(tok.text))
          throw parse_error("unexpected keyword '" + tok.text + "'", tok.line,
                            tok.column);
        next();
        return Term::variable(tok.text);
      }
      default:
        throw parse_error("expected a term", tok.line, tok.column);
    }
  }

  // ---- plumbing -----------------------------------------------------------
  static bool is_keyword(const std::string& s) {
    return s == "all" || s == "some" || s == "atom" || s == "unit" ||
           s == "sum" || s == "sub" || s == "indisc" || s == "N" ||
           s == "empty" || s == "I" || s == "M";
  }

  const Token& peek() const { return lexer_.tokens()[pos_]; }
  const Token& next() { return lexer_.tokens()[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Token::Kind k, const std::string& message) {
    if (!accept(k)) throw parse_error(message, peek().line, peek().column);
  }
  Nat expect_nat() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Zero) {
      next();
      return 0;
    }
    if (tok.kind != Token::Kind::Number)
      throw parse_error("expected a number", tok.line, tok.column);
    next();
    return std::stoll(tok.text);
  }
  void expect_end() {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::End)
      throw parse_error("trailing input '" + tok.text + "'", tok.line,
                        tok.column);
  }

  Lexer lexer_;
  size_t pos_ = 0;
};

}  // namespace detail

inline FormulaPtr parse_formula(const std::string& text) {
  return detail::Parser(text).parse_formula();
}

inline PeriodicSet parse_set(const std::string& text) {
  return detail::Parser(text).parse_set();
}

}  // namespace classize
