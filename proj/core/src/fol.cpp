#include "alba/fol.hpp"

#include <algorithm>
#include <ostream>

namespace alba {

FoFormula FoFormula::make(FoKind kind, std::vector<Term> terms, std::vector<FoFormula> kids,
                          std::string var) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->terms = std::move(terms);
  node->kids = std::move(kids);
  node->var = std::move(var);
  return FoFormula(std::move(node));
}

FoFormula FoFormula::rel(Term from, Term to) {
  return make(FoKind::Rel, {std::move(from), std::move(to)}, {});
}
FoFormula FoFormula::eq(Term a, Term b) { return make(FoKind::Eq, {std::move(a), std::move(b)}, {}); }
FoFormula FoFormula::neq(Term a, Term b) {
  return make(FoKind::Neq, {std::move(a), std::move(b)}, {});
}
FoFormula FoFormula::truth() { return make(FoKind::True, {}, {}); }
FoFormula FoFormula::falsity() { return make(FoKind::False, {}, {}); }
FoFormula FoFormula::negation(FoFormula f) { return make(FoKind::Not, {}, {std::move(f)}); }
FoFormula FoFormula::conj(std::vector<FoFormula> operands) {
  return make(FoKind::And, {}, std::move(operands));
}
FoFormula FoFormula::disj(std::vector<FoFormula> operands) {
  return make(FoKind::Or, {}, std::move(operands));
}
FoFormula FoFormula::conj_of(std::vector<FoFormula> operands) {
  if (operands.empty()) return truth();
  if (operands.size() == 1) return std::move(operands.front());
  return conj(std::move(operands));
}
FoFormula FoFormula::disj_of(std::vector<FoFormula> operands) {
  if (operands.empty()) return falsity();
  if (operands.size() == 1) return std::move(operands.front());
  return disj(std::move(operands));
}
FoFormula FoFormula::imp(FoFormula lhs, FoFormula rhs) {
  return make(FoKind::Imp, {}, {std::move(lhs), std::move(rhs)});
}
FoFormula FoFormula::forall(std::string var, FoFormula body) {
  return make(FoKind::Forall, {}, {std::move(body)}, std::move(var));
}
FoFormula FoFormula::exists(std::string var, FoFormula body) {
  return make(FoKind::Exists, {}, {std::move(body)}, std::move(var));
}

bool operator==(const FoFormula& a, const FoFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.var() == b.var() && a.terms() == b.terms() &&
         a.operands() == b.operands();
}

std::string VarGen::next() {
  static constexpr const char* kBase[] = {"x", "y", "z"};
  for (;;) {
    const std::size_t round = counter_ / 3;
    std::string name = kBase[counter_ % 3];
    if (round > 0) name += std::to_string(round);
    ++counter_;
    if (!reserved_.contains(name)) return name;
  }
}

namespace {

void collect_free(const FoFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  for (const auto& t : f.terms()) {
    if (t.is_var() && !bound.contains(t.name)) out.insert(t.name);
  }
  if (f.is_quantifier()) {
    const bool fresh = bound.insert(f.var()).second;
    collect_free(f.body(), bound, out);
    if (fresh) bound.erase(f.var());
    return;
  }
  for (const auto& k : f.operands()) collect_free(k, bound, out);
}

void collect_constants(const FoFormula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) {
    if (!t.is_var()) out.insert(t.name);
  }
  for (const auto& k : f.operands()) collect_constants(k, out);
}

FoFormula map_terms(const FoFormula& f, const auto& fn) {
  switch (f.kind()) {
    case FoKind::Rel:
      return FoFormula::rel(fn(f.terms()[0]), fn(f.terms()[1]));
    case FoKind::Eq:
      return FoFormula::eq(fn(f.terms()[0]), fn(f.terms()[1]));
    case FoKind::Neq:
      return FoFormula::neq(fn(f.terms()[0]), fn(f.terms()[1]));
    default:
      return f;
  }
}

FoFormula rebuild(const FoFormula& f, std::vector<FoFormula> kids) {
  switch (f.kind()) {
    case FoKind::Not:
      return FoFormula::negation(std::move(kids.at(0)));
    case FoKind::And:
      return FoFormula::conj(std::move(kids));
    case FoKind::Or:
      return FoFormula::disj(std::move(kids));
    case FoKind::Imp:
      return FoFormula::imp(std::move(kids.at(0)), std::move(kids.at(1)));
    case FoKind::Forall:
      return FoFormula::forall(f.var(), std::move(kids.at(0)));
    case FoKind::Exists:
      return FoFormula::exists(f.var(), std::move(kids.at(0)));
    default:
      return f;
  }
}

std::vector<std::string> natural_sorted(const std::set<std::string>& names) {
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return out;
}

FoSentence close_over_constants(FoFormula f) {
  FoSentence s{f, natural_sorted(constants(f))};
  for (const auto& c : s.promoted) s.formula = constant_to_var(s.formula, c);
  for (auto it = s.promoted.rbegin(); it != s.promoted.rend(); ++it) {
    s.formula = FoFormula::forall(*it, s.formula);
  }
  return s;
}

}  // namespace

std::set<std::string> free_vars(const FoFormula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> constants(const FoFormula& f) {
  std::set<std::string> out;
  collect_constants(f, out);
  return out;
}

bool is_closed(const FoFormula& f) { return free_vars(f).empty(); }

FoFormula substitute(const FoFormula& f, const std::string& var, const Term& t) {
  if (f.terms().size() > 0) {
    return map_terms(f, [&](const Term& u) { return u.is_var() && u.name == var ? t : u; });
  }
  if (f.is_quantifier() && f.var() == var) return f;
  if (f.operands().empty()) return f;
  std::vector<FoFormula> kids;
  kids.reserve(f.operands().size());
  for (const auto& k : f.operands()) kids.push_back(substitute(k, var, t));
  return rebuild(f, std::move(kids));
}

FoFormula constant_to_var(const FoFormula& f, const std::string& name) {
  if (f.terms().size() > 0) {
    return map_terms(f, [&](const Term& u) { return !u.is_var() && u.name == name ? Term::var(name) : u; });
  }
  if (f.operands().empty()) return f;
  std::vector<FoFormula> kids;
  kids.reserve(f.operands().size());
  for (const auto& k : f.operands()) kids.push_back(constant_to_var(k, name));
  return rebuild(f, std::move(kids));
}

FoFormula st_formula(const Formula& phi, const Term& x, VarGen& gen) {
  switch (phi.kind()) {
    case Kind::Prop:
      throw NonPureInput("standard translation of a formula with propositional variable " +
                         phi.name());
    case Kind::Top:
      return FoFormula::truth();
    case Kind::Bot:
      return FoFormula::falsity();
    case Kind::Nom:
      return FoFormula::eq(x, Term::constant(phi.name()));
    case Kind::CoNom:
      return FoFormula::neq(x, Term::constant(phi.name()));
    case Kind::Imp: {
      FoFormula a = st_formula(phi.lhs(), x, gen);
      return FoFormula::imp(std::move(a), st_formula(phi.rhs(), x, gen));
    }
    case Kind::And: {
      FoFormula a = st_formula(phi.lhs(), x, gen);
      return FoFormula::conj({std::move(a), st_formula(phi.rhs(), x, gen)});
    }
    case Kind::Or: {
      FoFormula a = st_formula(phi.lhs(), x, gen);
      return FoFormula::disj({std::move(a), st_formula(phi.rhs(), x, gen)});
    }
    case Kind::Box: {
      const Term y = Term::var(gen.next());
      return FoFormula::forall(y.name,
                               FoFormula::imp(FoFormula::rel(x, y), st_formula(phi.body(), y, gen)));
    }
    case Kind::BlackDiamond: {
      const Term y = Term::var(gen.next());
      return FoFormula::exists(
          y.name, FoFormula::conj({FoFormula::rel(y, x), st_formula(phi.body(), y, gen)}));
    }
  }
  return FoFormula::falsity();
}

FoFormula st_formula(const Formula& phi, const std::string& x) {
  VarGen gen({x});
  return st_formula(phi, Term::var(x), gen);
}

FoFormula st_inequality(const Inequality& q, VarGen& gen) {
  const Term x = Term::var(gen.next());
  FoFormula a = st_formula(q.lhs, x, gen);
  return FoFormula::forall(x.name, FoFormula::imp(std::move(a), st_formula(q.rhs, x, gen)));
}

FoFormula st_quasi_open(const QuasiInequality& q, VarGen& gen) {
  std::vector<FoFormula> ants;
  for (const auto& a : q.antecedents) ants.push_back(st_inequality(a, gen));
  FoFormula conclusion = st_inequality(q.conclusion, gen);
  if (ants.empty()) return conclusion;
  return FoFormula::imp(FoFormula::conj_of(std::move(ants)), std::move(conclusion));
}

FoFormula st_quasi_open(const QuasiInequality& q) {
  VarGen gen;
  return st_quasi_open(q, gen);
}

FoSentence st_quasi(const QuasiInequality& q) { return close_over_constants(st_quasi_open(q)); }

FoSentence correspondent(const std::vector<QuasiInequality>& quasis) {
  VarGen gen;
  std::vector<FoFormula> parts;
  for (const auto& q : quasis) parts.push_back(st_quasi_open(q, gen));
  return close_over_constants(FoFormula::conj_of(std::move(parts)));
}

// Printing.

namespace {

int precedence(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::Forall:
    case FoKind::Exists:
      return 0;
    case FoKind::Imp:
      return 1;
    case FoKind::Or:
      return 2;
    case FoKind::And:
      return 3;
    case FoKind::Not:
      return 4;
    default:
      return 5;
  }
}

void print(const FoFormula& f, std::string& out);

void print_operand(const FoFormula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(const FoFormula& f, std::string& out) {
  switch (f.kind()) {
    case FoKind::Rel:
      out += "R(" + to_string(f.terms()[0]) + "," + to_string(f.terms()[1]) + ")";
      return;
    case FoKind::Eq:
      out += to_string(f.terms()[0]) + " = " + to_string(f.terms()[1]);
      return;
    case FoKind::Neq:
      out += to_string(f.terms()[0]) + " != " + to_string(f.terms()[1]);
      return;
    case FoKind::True:
      out += 'T';
      return;
    case FoKind::False:
      out += 'F';
      return;
    case FoKind::Not:
      out += '~';
      print_operand(f.operand(0), precedence(f.operand(0)) < 4 || f.operand(0).is(FoKind::Eq) ||
                                      f.operand(0).is(FoKind::Neq),
                    out);
      return;
    case FoKind::And:
    case FoKind::Or: {
      const int p = precedence(f);
      const char* sep = f.is(FoKind::And) ? " /\\ " : " \\/ ";
      for (std::size_t i = 0; i < f.operands().size(); ++i) {
        if (i > 0) out += sep;
        print_operand(f.operand(i), precedence(f.operand(i)) <= p, out);
      }
      return;
    }
    case FoKind::Imp:
      print_operand(f.operand(0), precedence(f.operand(0)) <= 1, out);
      out += " -> ";
      print_operand(f.operand(1), precedence(f.operand(1)) < 1, out);
      return;
    case FoKind::Forall:
    case FoKind::Exists: {
      out += f.is(FoKind::Forall) ? "A " : "E ";
      out += f.var();
      out += ". ";
      const FoFormula& b = f.body();
      print_operand(b, !b.is_quantifier() && precedence(b) < 4, out);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const FoFormula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const FoSentence& s) { return to_string(s.formula); }

std::ostream& operator<<(std::ostream& os, const FoFormula& f) { return os << to_string(f); }

}  // namespace alba
