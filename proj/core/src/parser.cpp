// Recursive-descent parser for the ASCII concrete syntax:
//
//   ineq  ::= form "<=" form
//   form  ::= imp
//   imp   ::= or ("->" imp)?
//   or    ::= and ("\/" and)*
//   and   ::= unary ("/\" unary)*
//   unary ::= "box" unary | "bdiam" unary | atom
//   atom  ::= "T" | "F" | propname | nomname | conomname | "(" form ")"

#include <cctype>

#include "alba/syntax.hpp"

namespace alba {

namespace {

enum class Tok { Ident, Arrow, And, Or, Leq, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, "end of input", start};
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), start};
    }
    auto two = [&](std::string_view s) { return src_.substr(pos_, 2) == s; };
    if (two("->")) return advance(Tok::Arrow, 2, start);
    if (two("/\\")) return advance(Tok::And, 2, start);
    if (two("\\/")) return advance(Tok::Or, 2, start);
    if (two("<=")) return advance(Tok::Leq, 2, start);
    if (c == '(') return advance(Tok::LParen, 1, start);
    if (c == ')') return advance(Tok::RParen, 1, start);
    throw ParseError(start, {"formula"}, "'" + std::string(1, c) + "'");
  }

 private:
  Token advance(Tok kind, std::size_t n, std::size_t start) {
    pos_ += n;
    return {kind, std::string(src_.substr(start, n)), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { shift(); }

  Inequality inequality() {
    Formula lhs = form();
    expect(Tok::Leq, "'<='");
    Formula rhs = form();
    expect(Tok::End, "end of input");
    return {std::move(lhs), std::move(rhs)};
  }

  Formula formula() {
    Formula f = form();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  Formula form() { return imp(); }

  Formula imp() {
    Formula lhs = disj();
    if (cur_.kind == Tok::Arrow) {
      shift();
      return Formula::imp(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (cur_.kind == Tok::Or) {
      shift();
      f = Formula::disj(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (cur_.kind == Tok::And) {
      shift();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (cur_.kind == Tok::Ident && cur_.text == "box") {
      shift();
      return Formula::box(unary());
    }
    if (cur_.kind == Tok::Ident && cur_.text == "bdiam") {
      shift();
      return Formula::bdiam(unary());
    }
    return atom();
  }

  Formula atom() {
    if (cur_.kind == Tok::LParen) {
      shift();
      Formula f = form();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (cur_.kind == Tok::Ident) {
      const std::string& t = cur_.text;
      Formula f = Formula::top();
      if (t == "T") {
        f = Formula::top();
      } else if (t == "F") {
        f = Formula::bot();
      } else if (is_nominal_name(t)) {
        f = Formula::nom(t);
      } else if (is_conominal_name(t)) {
        f = Formula::conom(t);
      } else if (is_prop_name(t)) {
        f = Formula::prop(t);
      } else {
        fail({"formula"});
      }
      shift();
      return f;
    }
    fail({"formula"});
  }

  // Only called right after a complete formula, which a binary connective
  // could still extend.
  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail({"'->'", "'\\/'", "'/\\'", what});
    shift();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = cur_.kind == Tok::End ? cur_.text : "'" + cur_.text + "'";
    throw ParseError(cur_.pos, std::move(expected), std::move(found));
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula(); }

Inequality parse_inequality(std::string_view text) { return Parser(text).inequality(); }

}  // namespace alba
