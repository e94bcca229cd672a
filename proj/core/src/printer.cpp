#include "alba/syntax.hpp"

namespace alba {

namespace {

// Binding strength; higher binds tighter.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Imp:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    case Kind::Box:
    case Kind::BlackDiamond:
      return 4;
    default:
      return 5;
  }
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Prop:
    case Kind::Nom:
    case Kind::CoNom:
      out += f.name();
      return;
    case Kind::Top:
      out += 'T';
      return;
    case Kind::Bot:
      out += 'F';
      return;
    case Kind::Box:
    case Kind::BlackDiamond: {
      out += f.is(Kind::Box) ? "box" : "bdiam";
      if (precedence(f.body()) >= 4) {
        out += ' ';
        print(f.body(), out);
      } else {
        print_operand(f.body(), true, out);
      }
      return;
    }
    case Kind::Imp:
      // Right-associative.
      print_operand(f.lhs(), precedence(f.lhs()) <= 1, out);
      out += " -> ";
      print_operand(f.rhs(), precedence(f.rhs()) < 1, out);
      return;
    case Kind::Or:
    case Kind::And: {
      // Left-associative.
      const int p = precedence(f);
      print_operand(f.lhs(), precedence(f.lhs()) < p, out);
      out += f.is(Kind::And) ? " /\\ " : " \\/ ";
      print_operand(f.rhs(), precedence(f.rhs()) <= p, out);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const Inequality& q) {
  return to_string(q.lhs) + " <= " + to_string(q.rhs);
}

std::string to_string(const QuasiInequality& q) {
  std::string out;
  for (std::size_t i = 0; i < q.antecedents.size(); ++i) {
    if (i > 0) out += " & ";
    out += to_string(q.antecedents[i]);
  }
  out += out.empty() ? "=> " : " => ";
  out += to_string(q.conclusion);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const Inequality& q) { return os << to_string(q); }
std::ostream& operator<<(std::ostream& os, const QuasiInequality& q) {
  return os << to_string(q);
}

}  // namespace alba
