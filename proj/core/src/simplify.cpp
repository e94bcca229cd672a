#include <algorithm>

#include "alba/fol.hpp"

namespace alba {

namespace {

FoFormula nnf(const FoFormula& f, bool negate) {
  switch (f.kind()) {
    case FoKind::Rel:
      return negate ? FoFormula::negation(f) : f;
    case FoKind::Eq:
      return negate ? FoFormula::neq(f.terms()[0], f.terms()[1]) : f;
    case FoKind::Neq:
      return negate ? FoFormula::eq(f.terms()[0], f.terms()[1]) : f;
    case FoKind::True:
      return negate ? FoFormula::falsity() : f;
    case FoKind::False:
      return negate ? FoFormula::truth() : f;
    case FoKind::Not:
      return nnf(f.operand(0), !negate);
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoFormula> kids;
      for (const auto& k : f.operands()) kids.push_back(nnf(k, negate));
      const bool conj = f.is(FoKind::And) != negate;
      return conj ? FoFormula::conj(std::move(kids)) : FoFormula::disj(std::move(kids));
    }
    case FoKind::Imp:
      if (negate) return FoFormula::conj({nnf(f.operand(0), false), nnf(f.operand(1), true)});
      return FoFormula::disj({nnf(f.operand(0), true), nnf(f.operand(1), false)});
    case FoKind::Forall:
    case FoKind::Exists: {
      FoFormula body = nnf(f.body(), negate);
      const bool universal = f.is(FoKind::Forall) != negate;
      return universal ? FoFormula::forall(f.var(), std::move(body))
                       : FoFormula::exists(f.var(), std::move(body));
    }
  }
  return f;
}

bool is_equation(const FoFormula& f) { return f.is(FoKind::Eq) || f.is(FoKind::Neq); }

// Structural equality, reading = and != as symmetric.
bool same(const FoFormula& a, const FoFormula& b) {
  if (a == b) return true;
  return is_equation(a) && a.kind() == b.kind() && a.terms()[0] == b.terms()[1] &&
         a.terms()[1] == b.terms()[0];
}

bool complementary(const FoFormula& a, const FoFormula& b) {
  if (a.is(FoKind::Not)) return a.operand(0) == b;
  if (b.is(FoKind::Not)) return b.operand(0) == a;
  if (is_equation(a) && is_equation(b) && a.kind() != b.kind()) {
    const auto& s = a.terms();
    const auto& t = b.terms();
    return (s[0] == t[0] && s[1] == t[1]) || (s[0] == t[1] && s[1] == t[0]);
  }
  return false;
}

bool binds(const FoFormula& f, const std::string& v) {
  if (f.is_quantifier() && f.var() == v) return true;
  return std::any_of(f.operands().begin(), f.operands().end(),
                     [&](const FoFormula& k) { return binds(k, v); });
}

FoFormula simp(const FoFormula& f);

FoFormula simp_connective(const FoFormula& f) {
  const bool conj = f.is(FoKind::And);
  const FoKind unit = conj ? FoKind::True : FoKind::False;
  const FoKind absorbing = conj ? FoKind::False : FoKind::True;
  std::vector<FoFormula> flat;
  for (const auto& k : f.operands()) {
    FoFormula s = simp(k);
    if (s.kind() == f.kind()) {
      flat.insert(flat.end(), s.operands().begin(), s.operands().end());
    } else {
      flat.push_back(std::move(s));
    }
  }
  std::vector<FoFormula> out;
  for (auto& s : flat) {
    if (s.is(unit)) continue;
    if (s.is(absorbing)) return s;
    const auto has = [&](auto pred) { return std::any_of(out.begin(), out.end(), pred); };
    if (has([&](const FoFormula& o) { return same(o, s); })) continue;
    if (has([&](const FoFormula& o) { return complementary(o, s); })) {
      return conj ? FoFormula::falsity() : FoFormula::truth();
    }
    out.push_back(std::move(s));
  }
  return conj ? FoFormula::conj_of(std::move(out)) : FoFormula::disj_of(std::move(out));
}

// Treats a maximal run of same-kind quantifiers as one block. Under forall a
// disjunct v != t eliminates v by substituting t; under exists a conjunct
// v = t does the same.
FoFormula simp_block(const FoFormula& f) {
  const FoKind kind = f.kind();
  const bool universal = kind == FoKind::Forall;
  const FoKind pivot = universal ? FoKind::Neq : FoKind::Eq;
  const FoKind joint = universal ? FoKind::Or : FoKind::And;

  std::vector<std::string> vars;
  FoFormula m = f;
  while (m.kind() == kind) {
    vars.push_back(m.var());
    m = m.body();
  }
  m = simp(m);

  for (bool changed = true; changed;) {
    changed = false;
    while (m.kind() == kind) {
      vars.push_back(m.var());
      m = m.body();
    }
    const auto fv = free_vars(m);
    std::erase_if(vars, [&](const std::string& v) { return !fv.contains(v); });

    const std::vector<FoFormula> items =
        m.kind() == joint ? m.operands() : std::vector<FoFormula>{m};
    const auto in_block = [&](const Term& t) {
      return t.is_var() && std::find(vars.begin(), vars.end(), t.name) != vars.end();
    };
    for (std::size_t i = 0; i < items.size() && !changed; ++i) {
      if (!items[i].is(pivot)) continue;
      Term a = items[i].terms()[0];
      Term b = items[i].terms()[1];
      if (a == b) continue;
      if (in_block(a) && in_block(b)) {
        if (natural_less(a.name, b.name)) std::swap(a, b);
      } else if (in_block(b)) {
        std::swap(a, b);
      } else if (!in_block(a)) {
        continue;
      }
      // a is eliminated in favour of b.
      if (b.is_var() && binds(m, b.name)) continue;
      std::vector<FoFormula> rest;
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (k != i) rest.push_back(substitute(items[k], a.name, b));
      }
      m = simp(universal ? FoFormula::disj_of(std::move(rest))
                         : FoFormula::conj_of(std::move(rest)));
      std::erase(vars, a.name);
      changed = true;
    }
  }

  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    m = universal ? FoFormula::forall(*it, m) : FoFormula::exists(*it, m);
  }
  return m;
}

FoFormula simp(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::Eq:
      return f.terms()[0] == f.terms()[1] ? FoFormula::truth() : f;
    case FoKind::Neq:
      return f.terms()[0] == f.terms()[1] ? FoFormula::falsity() : f;
    case FoKind::Not: {
      FoFormula k = simp(f.operand(0));
      if (k.is(FoKind::True)) return FoFormula::falsity();
      if (k.is(FoKind::False)) return FoFormula::truth();
      return FoFormula::negation(std::move(k));
    }
    case FoKind::And:
    case FoKind::Or:
      return simp_connective(f);
    case FoKind::Forall:
    case FoKind::Exists:
      return simp_block(f);
    default:
      return f;
  }
}

bool negative_literal(const FoFormula& f) {
  return f.is(FoKind::Neq) || (f.is(FoKind::Not) && f.operand(0).is(FoKind::Rel));
}

FoFormula complement(const FoFormula& f) {
  if (f.is(FoKind::Neq)) return FoFormula::eq(f.terms()[0], f.terms()[1]);
  return f.operand(0);
}

// Disjunctions mixing negative literals with other disjuncts become
// implications: ~a \/ b != c \/ d  =>  a /\ b = c -> d.
FoFormula implication_form(const FoFormula& f) {
  if (f.operands().empty()) return f;
  std::vector<FoFormula> kids;
  for (const auto& k : f.operands()) kids.push_back(implication_form(k));
  switch (f.kind()) {
    case FoKind::Not:
      return FoFormula::negation(std::move(kids[0]));
    case FoKind::And:
      return FoFormula::conj(std::move(kids));
    case FoKind::Imp:
      return FoFormula::imp(std::move(kids[0]), std::move(kids[1]));
    case FoKind::Forall:
      return FoFormula::forall(f.var(), std::move(kids[0]));
    case FoKind::Exists:
      return FoFormula::exists(f.var(), std::move(kids[0]));
    default:
      break;
  }
  const auto negatives = std::count_if(kids.begin(), kids.end(), negative_literal);
  if (negatives == 0 || negatives == static_cast<std::ptrdiff_t>(kids.size())) {
    return FoFormula::disj(std::move(kids));
  }
  std::vector<FoFormula> premises;
  std::vector<FoFormula> conclusions;
  for (auto& k : kids) {
    if (negative_literal(k)) {
      premises.push_back(complement(k));
    } else {
      conclusions.push_back(std::move(k));
    }
  }
  return FoFormula::imp(FoFormula::conj_of(std::move(premises)),
                        FoFormula::disj_of(std::move(conclusions)));
}

}  // namespace

FoFormula simplify(const FoFormula& f) {
  FoFormula cur = nnf(f, false);
  for (;;) {
    FoFormula next = simp(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return implication_form(cur);
}

FoSentence simplify(const FoSentence& s) {
  FoSentence out{simplify(s.formula), {}};
  for (const FoFormula* cur = &out.formula; cur->is(FoKind::Forall); cur = &cur->body()) {
    if (std::find(s.promoted.begin(), s.promoted.end(), cur->var()) != s.promoted.end()) {
      out.promoted.push_back(cur->var());
    }
  }
  return out;
}

}  // namespace alba
