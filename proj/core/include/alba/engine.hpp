// The ALBA rewrite pipeline: distribution and splitting, first
// approximation, the reduction rules with a fixed schedule, right-handed
// Ackermann elimination, and trace recording and replay.

#ifndef ALBA_ENGINE_HPP_
#define ALBA_ENGINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "alba/classify.hpp"
#include "alba/syntax.hpp"

namespace alba {

enum class Rule {
  DeleteTop,
  SplitAnd,
  SplitOr,
  ResiduationBox,
  ResiduationImp,
  ApproximationBox,
  ApproximationImp,
  Ackermann,
};

std::string to_string(Rule rule);
// Inverse of to_string(Rule); nullopt for unknown names.
std::optional<Rule> rule_from_string(std::string_view name);

struct Substitution {
  std::string var;
  Formula formula;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

// One rule application. `consumed` lists the removed inequalities in the
// order they appeared; `produced` is inserted where the first of them was.
struct TraceStep {
  Rule rule;
  std::vector<Inequality> consumed;
  std::vector<Inequality> produced;
  std::optional<Substitution> subst;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using Trace = std::vector<TraceStep>;

struct System {
  std::vector<Inequality> inequalities;
  std::string i0;
  std::string m0;
  SymbolPool pool;
};

// Exhaustive distribution on the antecedent side:
//   a /\ (b \/ c) => (a /\ b) \/ (a /\ c),  (b \/ c) /\ a => (b /\ a) \/ (c /\ a).
Formula distribute_antecedent(const Formula& f);
// Exhaustive distribution on the succedent side:
//   a -> b /\ c => (a -> b) /\ (a -> c),  box(a /\ b) => box a /\ box b,
//   a \/ (b /\ c) => (a \/ b) /\ (a \/ c),  (b /\ c) \/ a => (b \/ a) /\ (c \/ a).
Formula distribute_succedent(const Formula& f);

// Distribution followed by exhaustive splitting of /\ on the right and \/ on
// the left. Conjuncts of the right-hand side are split before disjuncts of
// the left-hand side.
std::vector<Inequality> preprocess(const Inequality& ineq);

// {i0 <= lhs, rhs <= m0} with i0, m0 fresh for `pool` (which is first
// seeded with the symbols of ineq).
System first_approximation(const Inequality& ineq, SymbolPool pool = {});

struct Stuck {
  std::string variable;
  std::string reason;
  std::optional<Inequality> inequality;
};

struct ReduceResult {
  std::vector<Inequality> inequalities;
  Trace trace;
  std::optional<Stuck> stuck;

  bool ok() const noexcept { return !stuck.has_value(); }
};

// Applies the reduction rules to the first inequality they match until none
// does, then eliminates variables with the Ackermann rule, always picking an
// omega-minimal variable (alphabetically first among ties).
ReduceResult reduce(System sys, const OmegaOrder& omega = {});

// Applies a single recorded step. Throws std::invalid_argument if a consumed
// inequality is missing.
void apply_step(std::vector<Inequality>& system, const TraceStep& step);
std::vector<Inequality> replay(std::vector<Inequality> system, const Trace& trace);

enum class Status { Success, Failure };

struct SystemRun {
  Inequality residual;
  System initial;
  ReduceResult reduced;
};

struct AlbaFailure {
  std::size_t system;
  Stuck stuck;
};

struct AlbaResult {
  Status status = Status::Failure;
  Classification classification;
  std::vector<SystemRun> runs;
  std::vector<QuasiInequality> quasis;  // one per run, only on success
  std::optional<AlbaFailure> failure;

  std::vector<Trace> traces() const;
  // "variable p not eliminable: ..." on failure, empty on success.
  std::string failure_message() const;
};

// Classifies, preprocesses, and reduces every residual inequality. Inputs
// that are not inductive are still attempted, with an empty dependence
// order, so that the failure names a variable.
AlbaResult run(const Inequality& ineq);

}  // namespace alba

#endif  // ALBA_ENGINE_HPP_
