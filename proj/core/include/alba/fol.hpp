// First-order correspondence language over a binary relation R and
// equality, the standard translation of pure expanded formulas into it, and
// a best-effort simplifier.

#ifndef ALBA_FOL_HPP_
#define ALBA_FOL_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alba/syntax.hpp"

namespace alba {

// Constants are nominal and conominal names; variables come from the bound
// variable generator (x, y, z, x1, ...) or from promoted constants.
struct Term {
  enum class Sort : std::uint8_t { Var, Const };

  Sort sort;
  std::string name;

  static Term var(std::string name) { return {Sort::Var, std::move(name)}; }
  static Term constant(std::string name) { return {Sort::Const, std::move(name)}; }
  bool is_var() const noexcept { return sort == Sort::Var; }

  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class FoKind : std::uint8_t {
  Rel,
  Eq,
  Neq,
  True,
  False,
  Not,
  And,
  Or,
  Imp,
  Forall,
  Exists,
};

// Immutable first-order formula. And/Or are n-ary.
class FoFormula {
 public:
  static FoFormula rel(Term from, Term to);
  static FoFormula eq(Term a, Term b);
  static FoFormula neq(Term a, Term b);
  static FoFormula truth();
  static FoFormula falsity();
  static FoFormula negation(FoFormula f);
  // Raw n-ary nodes; prefer conj_of/disj_of, which collapse 0 and 1 operands.
  static FoFormula conj(std::vector<FoFormula> operands);
  static FoFormula disj(std::vector<FoFormula> operands);
  static FoFormula conj_of(std::vector<FoFormula> operands);
  static FoFormula disj_of(std::vector<FoFormula> operands);
  static FoFormula imp(FoFormula lhs, FoFormula rhs);
  static FoFormula forall(std::string var, FoFormula body);
  static FoFormula exists(std::string var, FoFormula body);

  FoKind kind() const noexcept { return node_->kind; }
  bool is(FoKind k) const noexcept { return node_->kind == k; }
  bool is_quantifier() const noexcept { return is(FoKind::Forall) || is(FoKind::Exists); }

  // Arguments of Rel, Eq and Neq.
  const std::vector<Term>& terms() const noexcept { return node_->terms; }
  const std::vector<FoFormula>& operands() const noexcept { return node_->kids; }
  const FoFormula& operand(std::size_t i) const { return node_->kids.at(i); }
  // Bound variable of a quantifier.
  const std::string& var() const noexcept { return node_->var; }
  const FoFormula& body() const { return node_->kids.at(0); }

  friend bool operator==(const FoFormula& a, const FoFormula& b);

 private:
  struct Node {
    FoKind kind;
    std::vector<Term> terms;
    std::vector<FoFormula> kids;
    std::string var;
  };

  explicit FoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FoFormula make(FoKind kind, std::vector<Term> terms, std::vector<FoFormula> kids,
                        std::string var = {});

  std::shared_ptr<const Node> node_;
};

// A closed formula; `promoted` lists the nominal/conominal names that were
// turned into universally quantified variables, in prefix order.
struct FoSentence {
  FoFormula formula;
  std::vector<std::string> promoted;
};

class NonPureInput : public std::invalid_argument {
 public:
  explicit NonPureInput(const std::string& what) : std::invalid_argument(what) {}
};

// Bound variables x, y, z, x1, y1, z1, x2, ... skipping reserved names.
class VarGen {
 public:
  VarGen() = default;
  explicit VarGen(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}
  std::string next();

 private:
  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
};

std::set<std::string> free_vars(const FoFormula& f);
std::set<std::string> constants(const FoFormula& f);
bool is_closed(const FoFormula& f);

// Replaces free occurrences of variable `var` by `t`.
FoFormula substitute(const FoFormula& f, const std::string& var, const Term& t);
// Turns every constant `name` into the variable of the same name.
FoFormula constant_to_var(const FoFormula& f, const std::string& name);

// ST_x(phi). Throws NonPureInput if phi contains a propositional variable.
FoFormula st_formula(const Formula& phi, const Term& x, VarGen& gen);
FoFormula st_formula(const Formula& phi, const std::string& x);
// forall x (ST_x(lhs) -> ST_x(rhs)).
FoFormula st_inequality(const Inequality& q, VarGen& gen);
// The translation with nominals and conominals left as constants.
FoFormula st_quasi_open(const QuasiInequality& q, VarGen& gen);
FoFormula st_quasi_open(const QuasiInequality& q);
// The universal closure of st_quasi_open over all constants, in natural order.
FoSentence st_quasi(const QuasiInequality& q);
// Conjunction of the translations of all quasi-inequalities, closed over the
// union of their constants.
FoSentence correspondent(const std::vector<QuasiInequality>& quasis);

// Equivalence-preserving cleanup: negation normal form, one-point rules for
// (dis)equations with quantified variables, unit and duplicate removal,
// vacuous quantifier removal, then implication form for readability.
FoFormula simplify(const FoFormula& f);
FoSentence simplify(const FoSentence& s);

std::string to_string(const Term& t);
std::string to_string(const FoFormula& f);
std::string to_string(const FoSentence& s);
std::ostream& operator<<(std::ostream& os, const FoFormula& f);

}  // namespace alba

#endif  // ALBA_FOL_HPP_
