#include "smalc/parse.hpp"

#include <cctype>

namespace smalc {

namespace {

enum class Tok { Ident, Unit, Star, LSlash, RSlash, Amp, Bar, BangBrace, LParen, RParen, Comma, Arrow, End };

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;       // payload for Ident and BangBrace
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { next(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_ident() {
    std::size_t start = pos;
    if (pos >= text.size() || !ident_start(text[pos])) fail("expected identifier", pos);
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '*': tok = Tok::Star; ++pos; return;
      case '\\': tok = Tok::LSlash; ++pos; return;
      case '/': tok = Tok::RSlash; ++pos; return;
      case '&': tok = Tok::Amp; ++pos; return;
      case '|': tok = Tok::Bar; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case ',': tok = Tok::Comma; ++pos; return;
      case '1': tok = Tok::Unit; ++pos; return;
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          tok = Tok::Arrow;
          pos += 2;
          return;
        }
        fail("stray '-' (expected '->')", pos);
      case '!': {
        ++pos;
        if (pos >= text.size() || text[pos] != '{') fail("expected '{' after '!'", pos);
        ++pos;
        ident = read_ident();
        if (pos >= text.size() || text[pos] != '}') fail("expected '}' after index", pos);
        ++pos;
        tok = Tok::BangBrace;
        return;
      }
      default:
        if (ident_start(c)) {
          ident = read_ident();
          tok = Tok::Ident;
          return;
        }
        fail(std::string("unknown token '") + c + "'", pos);
    }
  }
};

struct Parser {
  Lexer lx;
  explicit Parser(const std::string& text) : lx(text) {}

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (lx.tok == Tok::Bar) {
      lx.next();
      f = Formula::plus(f, conj());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = division();
    while (lx.tok == Tok::Amp) {
      lx.next();
      f = Formula::with(f, division());
    }
    return f;
  }

  // Divisions do not associate: "a\b\c" is rejected, parenthesize.
  FormulaPtr division() {
    FormulaPtr f = product();
    if (lx.tok == Tok::LSlash || lx.tok == Tok::RSlash) {
      bool left = lx.tok == Tok::LSlash;
      lx.next();
      FormulaPtr rhs = product();
      if (lx.tok == Tok::LSlash || lx.tok == Tok::RSlash)
        lx.fail("divisions are non-associative; parenthesize", lx.tok_pos);
      f = left ? Formula::ldiv(f, rhs) : Formula::rdiv(f, rhs);
    }
    return f;
  }

  FormulaPtr product() {
    FormulaPtr f = unary();
    while (lx.tok == Tok::Star) {
      lx.next();
      f = Formula::product(f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    if (lx.tok == Tok::BangBrace) {
      std::string idx = lx.ident;
      lx.next();
      return Formula::bang(std::move(idx), unary());
    }
    return primary();
  }

  FormulaPtr primary() {
    switch (lx.tok) {
      case Tok::Ident: {
        FormulaPtr f = Formula::atom(lx.ident);
        lx.next();
        return f;
      }
      case Tok::Unit:
        lx.next();
        return Formula::unit();
      case Tok::LParen: {
        lx.next();
        FormulaPtr f = disj();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'", lx.tok_pos);
        lx.next();
        return f;
      }
      default:
        lx.fail("expected formula", lx.tok_pos);
    }
  }

  FormulaPtr formula_all() {
    FormulaPtr f = disj();
    if (lx.tok != Tok::End) lx.fail("trailing input after formula", lx.tok_pos);
    return f;
  }

  Sequent sequent_all() {
    Sequent s;
    if (lx.tok != Tok::Arrow) {
      s.antecedent.push_back(disj());
      while (lx.tok == Tok::Comma) {
        lx.next();
        s.antecedent.push_back(disj());
      }
    }
    if (lx.tok != Tok::Arrow) lx.fail("expected '->'", lx.tok_pos);
    lx.next();
    if (lx.tok == Tok::End) lx.fail("empty succedent", lx.tok_pos);
    s.succedent = disj();
    if (lx.tok != Tok::End) lx.fail("trailing input after sequent", lx.tok_pos);
    return s;
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).formula_all(); }

Sequent parse_sequent(const std::string& text) { return Parser(text).sequent_all(); }

}  // namespace smalc
