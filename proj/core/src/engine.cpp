#include "alba/engine.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <variant>

namespace alba {

namespace {

using RootRule = std::optional<Formula> (*)(const Formula&);

// Normalizes children first, then rewrites at the root until no rule applies.
Formula rewrite_bottom_up(const Formula& f, RootRule rule) {
  Formula cur = f;
  switch (f.kind()) {
    case Kind::Imp:
      cur = Formula::imp(rewrite_bottom_up(f.lhs(), rule), rewrite_bottom_up(f.rhs(), rule));
      break;
    case Kind::And:
      cur = Formula::conj(rewrite_bottom_up(f.lhs(), rule), rewrite_bottom_up(f.rhs(), rule));
      break;
    case Kind::Or:
      cur = Formula::disj(rewrite_bottom_up(f.lhs(), rule), rewrite_bottom_up(f.rhs(), rule));
      break;
    case Kind::Box:
      cur = Formula::box(rewrite_bottom_up(f.body(), rule));
      break;
    case Kind::BlackDiamond:
      cur = Formula::bdiam(rewrite_bottom_up(f.body(), rule));
      break;
    default:
      return f;
  }
  if (auto next = rule(cur)) return rewrite_bottom_up(*next, rule);
  return cur;
}

std::optional<Formula> antecedent_rule(const Formula& f) {
  if (!f.is(Kind::And)) return std::nullopt;
  const Formula& a = f.lhs();
  const Formula& b = f.rhs();
  if (a.is(Kind::Or)) {
    return Formula::disj(Formula::conj(a.lhs(), b), Formula::conj(a.rhs(), b));
  }
  if (b.is(Kind::Or)) {
    return Formula::disj(Formula::conj(a, b.lhs()), Formula::conj(a, b.rhs()));
  }
  return std::nullopt;
}

std::optional<Formula> succedent_rule(const Formula& f) {
  switch (f.kind()) {
    case Kind::Imp:
      if (f.rhs().is(Kind::And)) {
        return Formula::conj(Formula::imp(f.lhs(), f.rhs().lhs()),
                             Formula::imp(f.lhs(), f.rhs().rhs()));
      }
      return std::nullopt;
    case Kind::Box:
      if (f.body().is(Kind::And)) {
        return Formula::conj(Formula::box(f.body().lhs()), Formula::box(f.body().rhs()));
      }
      return std::nullopt;
    case Kind::Or: {
      const Formula& a = f.lhs();
      const Formula& b = f.rhs();
      if (a.is(Kind::And)) {
        return Formula::conj(Formula::disj(a.lhs(), b), Formula::disj(a.rhs(), b));
      }
      if (b.is(Kind::And)) {
        return Formula::conj(Formula::disj(a, b.lhs()), Formula::disj(a, b.rhs()));
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

void split(const Inequality& q, std::vector<Inequality>& out) {
  if (q.rhs.is(Kind::And)) {
    split({q.lhs, q.rhs.lhs()}, out);
    split({q.lhs, q.rhs.rhs()}, out);
  } else if (q.lhs.is(Kind::Or)) {
    split({q.lhs.lhs(), q.rhs}, out);
    split({q.lhs.rhs(), q.rhs}, out);
  } else {
    out.push_back(q);
  }
}

struct Rewrite {
  Rule rule;
  std::vector<Inequality> produced;
};

// The reduction rules in priority order; fresh symbols are drawn only when a
// rule fires.
std::optional<Rewrite> match_rule(const Inequality& q, SymbolPool& pool) {
  const Formula& a = q.lhs;
  const Formula& b = q.rhs;
  if (b.is(Kind::Top)) return Rewrite{Rule::DeleteTop, {}};
  if (b.is(Kind::And)) return Rewrite{Rule::SplitAnd, {{a, b.lhs()}, {a, b.rhs()}}};
  if (a.is(Kind::Or)) return Rewrite{Rule::SplitOr, {{a.lhs(), b}, {a.rhs(), b}}};
  if (b.is(Kind::Box)) return Rewrite{Rule::ResiduationBox, {{Formula::bdiam(a), b.body()}}};
  if (b.is(Kind::Imp)) {
    return Rewrite{Rule::ResiduationImp, {{Formula::conj(a, b.lhs()), b.rhs()}}};
  }
  if (!b.is(Kind::CoNom)) return std::nullopt;
  if (a.is(Kind::Box) && !a.body().is(Kind::CoNom)) {
    const Formula n = Formula::conom(pool.fresh(SymbolKind::Conominal));
    return Rewrite{Rule::ApproximationBox, {{Formula::box(n), b}, {a.body(), n}}};
  }
  if (a.is(Kind::Imp) && !(a.lhs().is(Kind::Nom) && a.rhs().is(Kind::CoNom))) {
    const Formula j = Formula::nom(pool.fresh(SymbolKind::Nominal));
    const Formula n = Formula::conom(pool.fresh(SymbolKind::Conominal));
    return Rewrite{Rule::ApproximationImp,
                   {{Formula::imp(j, n), b}, {j, a.lhs()}, {a.rhs(), n}}};
  }
  return std::nullopt;
}

std::set<std::string> system_props(const std::vector<Inequality>& system) {
  std::set<std::string> out;
  for (const auto& q : system) out.merge(props(q));
  return out;
}

std::optional<std::string> omega_minimal(const std::set<std::string>& remaining,
                                         const OmegaOrder& omega) {
  for (const auto& p : remaining) {
    const bool minimal = std::none_of(remaining.begin(), remaining.end(), [&](const auto& q) {
      return q != p && omega.less(q, p);
    });
    if (minimal) return p;
  }
  return std::nullopt;
}

// Builds the Ackermann step for p, or explains why p cannot be eliminated.
std::variant<TraceStep, Stuck> ackermann_step(const std::vector<Inequality>& system,
                                              const std::string& p) {
  TraceStep step{Rule::Ackermann, {}, {}, std::nullopt};
  std::vector<Formula> thetas;
  std::vector<Inequality> others;
  for (const auto& q : system) {
    if (!mentions_prop(q, p)) continue;
    step.consumed.push_back(q);
    if (q.rhs.is(Kind::Prop) && q.rhs.name() == p) {
      if (mentions_prop(q.lhs, p)) {
        return Stuck{p, "it occurs in its own minimal valuation", q};
      }
      thetas.push_back(q.lhs);
    } else {
      if (!positive_in(q.lhs, p)) {
        return Stuck{p, "it occurs negatively on the left-hand side", q};
      }
      if (!negative_in(q.rhs, p)) {
        return Stuck{p, "it occurs positively on the right-hand side", q};
      }
      others.push_back(q);
    }
  }
  if (thetas.empty()) {
    return Stuck{p, "no inequality of the form theta <= " + p,
                 step.consumed.empty() ? std::nullopt
                                       : std::optional<Inequality>(step.consumed.front())};
  }
  Formula valuation = thetas.front();
  for (std::size_t k = 1; k < thetas.size(); ++k) valuation = Formula::disj(valuation, thetas[k]);
  for (const auto& q : others) step.produced.push_back(substitute(q, p, valuation));
  step.subst = Substitution{p, valuation};
  return step;
}

}  // namespace

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::DeleteTop:
      return "delete-top";
    case Rule::SplitAnd:
      return "split-and";
    case Rule::SplitOr:
      return "split-or";
    case Rule::ResiduationBox:
      return "residuation-box";
    case Rule::ResiduationImp:
      return "residuation-imp";
    case Rule::ApproximationBox:
      return "approximation-box";
    case Rule::ApproximationImp:
      return "approximation-imp";
    case Rule::Ackermann:
      return "ackermann";
  }
  return "unknown";
}

std::optional<Rule> rule_from_string(std::string_view name) {
  static constexpr std::array kAll = {
      Rule::DeleteTop,        Rule::SplitAnd,         Rule::SplitOr,
      Rule::ResiduationBox,   Rule::ResiduationImp,   Rule::ApproximationBox,
      Rule::ApproximationImp, Rule::Ackermann,
  };
  for (Rule r : kAll) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

Formula distribute_antecedent(const Formula& f) { return rewrite_bottom_up(f, antecedent_rule); }

Formula distribute_succedent(const Formula& f) { return rewrite_bottom_up(f, succedent_rule); }

std::vector<Inequality> preprocess(const Inequality& ineq) {
  std::vector<Inequality> out;
  split({distribute_antecedent(ineq.lhs), distribute_succedent(ineq.rhs)}, out);
  return out;
}

System first_approximation(const Inequality& ineq, SymbolPool pool) {
  pool.add_symbols(ineq);
  System sys;
  sys.i0 = pool.fresh(SymbolKind::Nominal);
  sys.m0 = pool.fresh(SymbolKind::Conominal);
  sys.inequalities = {{Formula::nom(sys.i0), ineq.lhs}, {ineq.rhs, Formula::conom(sys.m0)}};
  sys.pool = std::move(pool);
  return sys;
}

void apply_step(std::vector<Inequality>& system, const TraceStep& step) {
  std::size_t insert_at = system.size();
  for (std::size_t k = 0; k < step.consumed.size(); ++k) {
    const auto it = std::find(system.begin(), system.end(), step.consumed[k]);
    if (it == system.end()) {
      throw std::invalid_argument("trace step " + to_string(step.rule) + " consumes " +
                                  to_string(step.consumed[k]) + ", which is not in the system");
    }
    if (k == 0) insert_at = static_cast<std::size_t>(it - system.begin());
    system.erase(it);
  }
  insert_at = std::min(insert_at, system.size());
  system.insert(system.begin() + static_cast<std::ptrdiff_t>(insert_at), step.produced.begin(),
                step.produced.end());
}

std::vector<Inequality> replay(std::vector<Inequality> system, const Trace& trace) {
  for (const auto& step : trace) apply_step(system, step);
  return system;
}

ReduceResult reduce(System sys, const OmegaOrder& omega) {
  ReduceResult out;
  auto& ineqs = sys.inequalities;

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& q : ineqs) {
      if (auto rw = match_rule(q, sys.pool)) {
        TraceStep step{rw->rule, {q}, std::move(rw->produced), std::nullopt};
        apply_step(ineqs, step);
        out.trace.push_back(std::move(step));
        changed = true;
        break;
      }
    }
  }

  for (auto remaining = system_props(ineqs); !remaining.empty(); remaining = system_props(ineqs)) {
    const auto p = omega_minimal(remaining, omega);
    if (!p) {
      out.stuck = Stuck{*remaining.begin(), "no omega-minimal variable remains", std::nullopt};
      break;
    }
    auto result = ackermann_step(ineqs, *p);
    if (auto* stuck = std::get_if<Stuck>(&result)) {
      out.stuck = std::move(*stuck);
      break;
    }
    auto& step = std::get<TraceStep>(result);
    apply_step(ineqs, step);
    out.trace.push_back(std::move(step));
  }
  out.inequalities = std::move(ineqs);
  return out;
}

std::vector<Trace> AlbaResult::traces() const {
  std::vector<Trace> out;
  for (const auto& r : runs) out.push_back(r.reduced.trace);
  return out;
}

std::string AlbaResult::failure_message() const {
  if (!failure) return {};
  std::string msg = "variable " + failure->stuck.variable + " not eliminable: " +
                    failure->stuck.reason;
  if (failure->stuck.inequality) msg += " (at " + to_string(*failure->stuck.inequality) + ")";
  return msg;
}

AlbaResult run(const Inequality& ineq) {
  AlbaResult result;
  result.classification = check_inductive(ineq);
  const OmegaOrder omega = result.classification.certificate
                               ? result.classification.certificate->omega
                               : OmegaOrder{};
  for (const auto& residual : preprocess(ineq)) {
    System sys = first_approximation(residual);
    SystemRun r{residual, sys, reduce(sys, omega)};
    if (!r.reduced.ok() && !result.failure) {
      result.failure = AlbaFailure{result.runs.size(), *r.reduced.stuck};
    }
    result.runs.push_back(std::move(r));
  }
  if (result.failure) return result;
  result.status = Status::Success;
  for (const auto& r : result.runs) {
    result.quasis.push_back(
        {r.reduced.inequalities, {Formula::nom(r.initial.i0), Formula::conom(r.initial.m0)}});
  }
  return result;
}

}  // namespace alba
