#include "alba/semantics.hpp"

#include <algorithm>
#include <functional>

namespace alba {

FiniteFrame::FiniteFrame(int n, const std::vector<std::pair<World, World>>& edges)
    : n_(n), succ_(static_cast<std::size_t>(std::max(n, 0)), 0),
      pred_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1 || n > kMaxWorlds) {
    throw std::invalid_argument("frame size must be between 1 and " +
                                std::to_string(kMaxWorlds));
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
    }
    succ_[u] |= WorldSet{1} << v;
    pred_[v] |= WorldSet{1} << u;
  }
}

FiniteFrame FiniteFrame::from_index(int n, std::uint64_t code) {
  std::vector<std::pair<World, World>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((code >> (u * n + v)) & 1U) edges.emplace_back(u, v);
    }
  }
  return FiniteFrame(n, edges);
}

std::vector<std::pair<World, World>> FiniteFrame::edges() const {
  std::vector<std::pair<World, World>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (related(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string to_string(const FiniteFrame& frame) {
  std::string out = "n=" + std::to_string(frame.size()) + " R={";
  bool first = true;
  for (const auto& [u, v] : frame.edges()) {
    if (!first) out += ',';
    first = false;
    out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return out + "}";
}

namespace {

template <typename Map>
auto lookup(const Map& map, const std::string& name) {
  const auto it = map.find(name);
  if (it == map.end()) throw UnassignedSymbol(name);
  return it->second;
}

WorldSet bit(World w) { return WorldSet{1} << w; }

}  // namespace

WorldSet extension(const Model& m, const Formula& phi) {
  const FiniteFrame& fr = m.frame;
  const WorldSet all = fr.all();
  switch (phi.kind()) {
    case Kind::Prop:
      return lookup(m.valuation.props, phi.name()) & all;
    case Kind::Top:
      return all;
    case Kind::Bot:
      return 0;
    case Kind::Nom:
      return bit(lookup(m.valuation.nominals, phi.name())) & all;
    case Kind::CoNom:
      return all & ~bit(lookup(m.valuation.conominals, phi.name()));
    case Kind::Imp:
      return (all & ~extension(m, phi.lhs())) | extension(m, phi.rhs());
    case Kind::And:
      return extension(m, phi.lhs()) & extension(m, phi.rhs());
    case Kind::Or:
      return extension(m, phi.lhs()) | extension(m, phi.rhs());
    case Kind::Box: {
      const WorldSet body = extension(m, phi.body());
      WorldSet out = 0;
      for (World w = 0; w < fr.size(); ++w) {
        if ((fr.successors(w) & ~body) == 0) out |= bit(w);
      }
      return out;
    }
    case Kind::BlackDiamond: {
      const WorldSet body = extension(m, phi.body());
      WorldSet out = 0;
      for (World w = 0; w < fr.size(); ++w) {
        if (fr.predecessors(w) & body) out |= bit(w);
      }
      return out;
    }
  }
  return 0;
}

bool eval(const Model& m, World w, const Formula& phi) { return (extension(m, phi) >> w) & 1U; }

bool holds_ineq(const Model& m, const Inequality& q) {
  return (extension(m, q.lhs) & ~extension(m, q.rhs)) == 0;
}

bool holds_quasi(const Model& m, const QuasiInequality& q) {
  for (const auto& a : q.antecedents) {
    if (!holds_ineq(m, a)) return true;
  }
  return holds_ineq(m, q.conclusion);
}

bool frame_valid(const FiniteFrame& frame, const Inequality& q) {
  std::set<std::string> ps = props(q);
  std::set<std::string> noms = nominals(q.lhs);
  noms.merge(nominals(q.rhs));
  std::set<std::string> conoms = conominals(q.lhs);
  conoms.merge(conominals(q.rhs));

  Model m{frame, {}};
  const int n = frame.size();
  for (const auto& p : ps) m.valuation.props[p] = 0;
  for (const auto& i : noms) m.valuation.nominals[i] = 0;
  for (const auto& c : conoms) m.valuation.conominals[c] = 0;

  // Odometer over all prop subsets, then all nominal/conominal points.
  std::vector<WorldSet*> sets;
  for (auto& [_, s] : m.valuation.props) sets.push_back(&s);
  std::vector<World*> points;
  for (auto& [_, w] : m.valuation.nominals) points.push_back(&w);
  for (auto& [_, w] : m.valuation.conominals) points.push_back(&w);
  const WorldSet limit = frame.all();

  for (;;) {
    if (!holds_ineq(m, q)) return false;
    std::size_t k = 0;
    for (; k < sets.size(); ++k) {
      if (*sets[k] < limit) {
        ++*sets[k];
        break;
      }
      *sets[k] = 0;
    }
    if (k < sets.size()) continue;
    std::size_t j = 0;
    for (; j < points.size(); ++j) {
      if (*points[j] + 1 < n) {
        ++*points[j];
        break;
      }
      *points[j] = 0;
    }
    if (j == points.size()) return true;
  }
}

struct FoEvaluator::Node {
  FoKind kind;
  int a = -1;  // slot of the first term / bound variable
  int b = -1;  // slot of the second term
  std::vector<Node> kids;
};

namespace {

using Scope = std::vector<std::pair<std::string, int>>;

int slot_of(const Scope& scope, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  return -1;
}

FoEvaluator::Node compile(const FoFormula& f, Scope& scope, int& slots) {
  FoEvaluator::Node node{f.kind(), -1, -1, {}};
  if (!f.terms().empty()) {
    node.a = slot_of(scope, f.terms()[0].name);
    node.b = slot_of(scope, f.terms()[1].name);
    return node;
  }
  if (f.is_quantifier()) {
    node.a = slots++;
    scope.emplace_back(f.var(), node.a);
    node.kids.push_back(compile(f.body(), scope, slots));
    scope.pop_back();
    return node;
  }
  for (const auto& k : f.operands()) node.kids.push_back(compile(k, scope, slots));
  return node;
}

bool run(const FoEvaluator::Node& node, const FiniteFrame& fr, std::vector<World>& env) {
  switch (node.kind) {
    case FoKind::Rel:
      return fr.related(env[node.a], env[node.b]);
    case FoKind::Eq:
      return env[node.a] == env[node.b];
    case FoKind::Neq:
      return env[node.a] != env[node.b];
    case FoKind::True:
      return true;
    case FoKind::False:
      return false;
    case FoKind::Not:
      return !run(node.kids[0], fr, env);
    case FoKind::And:
      return std::all_of(node.kids.begin(), node.kids.end(),
                         [&](const auto& k) { return run(k, fr, env); });
    case FoKind::Or:
      return std::any_of(node.kids.begin(), node.kids.end(),
                         [&](const auto& k) { return run(k, fr, env); });
    case FoKind::Imp:
      return !run(node.kids[0], fr, env) || run(node.kids[1], fr, env);
    case FoKind::Forall:
    case FoKind::Exists: {
      const bool universal = node.kind == FoKind::Forall;
      for (World w = 0; w < fr.size(); ++w) {
        env[node.a] = w;
        if (run(node.kids[0], fr, env) != universal) return !universal;
      }
      return universal;
    }
  }
  return false;
}

}  // namespace

FoEvaluator::FoEvaluator(const FoFormula& f) {
  std::set<std::string> names = free_vars(f);
  names.merge(constants(f));
  free_names_.assign(names.begin(), names.end());
  Scope scope;
  for (const auto& name : free_names_) scope.emplace_back(name, slots_++);
  root_ = std::make_shared<const Node>(compile(f, scope, slots_));
}

bool FoEvaluator::operator()(const FiniteFrame& frame, const Assignment& a) const {
  std::vector<World> env(static_cast<std::size_t>(slots_), 0);
  for (std::size_t k = 0; k < free_names_.size(); ++k) {
    const World w = lookup(a, free_names_[k]);
    if (w < 0 || w >= frame.size()) throw std::out_of_range("world out of range");
    env[k] = w;
  }
  return run(*root_, frame, env);
}

bool eval_fo(const FiniteFrame& frame, const FoFormula& f, const Assignment& a) {
  return FoEvaluator(f)(frame, a);
}

bool eval_fo(const FiniteFrame& frame, const FoSentence& s) { return eval_fo(frame, s.formula); }

CorrespondenceReport correspondence_check(const Inequality& q, const FoSentence& s, int max_n) {
  CorrespondenceReport report;
  report.max_n = max_n;
  const FoEvaluator fo(s.formula);
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t count = FiniteFrame::relation_count(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const FiniteFrame frame = FiniteFrame::from_index(n, code);
      ++report.frames_checked;
      const bool modal = frame_valid(frame, q);
      const bool first_order = fo(frame);
      if (modal != first_order) {
        report.counterexample = Counterexample{frame, modal, first_order};
        return report;
      }
    }
  }
  return report;
}

}  // namespace alba
