#include "alba/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace alba {

namespace {

void collect_polarity(const Formula& f, Path& path, bool negative,
                      std::vector<Occurrence>& out) {
  if (f.is(Kind::Prop)) {
    out.push_back({path, f.name(), negative ? Polarity::Negative : Polarity::Positive});
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const bool flip = f.is(Kind::Imp) && i == 0;
    path.push_back(static_cast<int>(i));
    collect_polarity(f.child(i), path, negative != flip, out);
    path.pop_back();
  }
}

bool occurs_with(const Formula& f, std::string_view p, bool negative, Polarity want) {
  if (f.is(Kind::Prop)) {
    if (f.name() != p) return false;
    const Polarity got = negative ? Polarity::Negative : Polarity::Positive;
    return got == want;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const bool flip = f.is(Kind::Imp) && i == 0;
    if (occurs_with(f.child(i), p, negative != flip, want)) return true;
  }
  return false;
}

bool pos_grammar(const Formula& f, const std::set<std::string>* allowed) {
  switch (f.kind()) {
    case Kind::Prop:
      return allowed == nullptr || allowed->contains(f.name());
    case Kind::Top:
      return true;
    case Kind::Box:
      return pos_grammar(f.body(), allowed);
    case Kind::And:
    case Kind::Or:
      return pos_grammar(f.lhs(), allowed) && pos_grammar(f.rhs(), allowed);
    default:
      return false;
  }
}

// PIA shape with an unrestricted POS part: returns the spine terminal (a Prop
// or T) or nullopt.
std::optional<Formula> pia_terminal(const Formula& f) {
  const Formula* cur = &f;
  for (;;) {
    switch (cur->kind()) {
      case Kind::Prop:
      case Kind::Top:
        return *cur;
      case Kind::Box:
        cur = &cur->body();
        break;
      case Kind::Imp:
        if (!is_pos(cur->lhs())) return std::nullopt;
        cur = &cur->rhs();
        break;
      default:
        return std::nullopt;
    }
  }
}

// PIA_p with A_p fixed; main == nullopt accepts only T-terminated blocks.
bool pia_grammar(const Formula& f, const std::optional<std::string>& main,
                 const std::set<std::string>* allowed) {
  switch (f.kind()) {
    case Kind::Prop:
      return main.has_value() && f.name() == *main;
    case Kind::Top:
      return true;
    case Kind::Box:
      return pia_grammar(f.body(), main, allowed);
    case Kind::Imp:
      return pos_grammar(f.lhs(), allowed) && pia_grammar(f.rhs(), main, allowed);
    default:
      return false;
  }
}

std::string path_string(const Path& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(path[i]);
  }
  return s + "]";
}

std::vector<std::vector<Formula>> ant_alternatives(const Formula& f) {
  if (f.is(Kind::Or)) {
    auto out = ant_alternatives(f.lhs());
    for (auto& alt : ant_alternatives(f.rhs())) out.push_back(std::move(alt));
    return out;
  }
  if (f.is(Kind::And)) {
    std::vector<std::vector<Formula>> out;
    const auto right = ant_alternatives(f.rhs());
    for (const auto& a : ant_alternatives(f.lhs())) {
      for (const auto& b : right) {
        auto joined = a;
        joined.insert(joined.end(), b.begin(), b.end());
        out.push_back(std::move(joined));
      }
    }
    return out;
  }
  return {{f}};
}

std::vector<Formula> suc_components(const Formula& f) {
  switch (f.kind()) {
    case Kind::And: {
      auto out = suc_components(f.lhs());
      for (auto& c : suc_components(f.rhs())) out.push_back(std::move(c));
      return out;
    }
    case Kind::Or: {
      std::vector<Formula> out;
      const auto right = suc_components(f.rhs());
      for (const auto& a : suc_components(f.lhs())) {
        for (const auto& b : right) out.push_back(Formula::disj(a, b));
      }
      return out;
    }
    case Kind::Box: {
      std::vector<Formula> out;
      for (auto& c : suc_components(f.body())) out.push_back(Formula::box(std::move(c)));
      return out;
    }
    case Kind::Imp: {
      std::vector<Formula> out;
      for (auto& c : suc_components(f.rhs())) out.push_back(Formula::imp(f.lhs(), std::move(c)));
      return out;
    }
    default:
      return {f};
  }
}

struct Walker {
  InductiveCertificate cert;
  ConstraintSet constraints;
  std::optional<ClassifyError> error;

  void fail(ClassifyFailure kind, std::string message) {
    if (!error) error = ClassifyError{kind, std::move(message)};
  }

  // Records f as a PIA block; returns false on failure.
  bool block(const Formula& f, const Path& path, std::vector<PiaBlock>& out,
             ClassifyFailure kind, const char* side) {
    const auto terminal = pia_terminal(f);
    if (!terminal) {
      fail(kind, std::string(side) + " subformula " + to_string(f) + " at " +
                     path_string(path) + " is not a PIA formula");
      return false;
    }
    if (terminal->is(Kind::Top)) {
      out.push_back({path, std::nullopt, f});
      return true;
    }
    const std::string& main = terminal->name();
    const auto cs = parse_pia(f, main);
    if (!cs) {
      fail(ClassifyFailure::CyclicOrder,
           "PIA block " + to_string(f) + " at " + path_string(path) + " has main variable " +
               main + " inside its own positive part, so " + main + " would precede itself");
      return false;
    }
    constraints.insert(cs->begin(), cs->end());
    out.push_back({path, main, f});
    return true;
  }

  bool antecedent(const Formula& f, Path& path) {
    if (f.is(Kind::And) || f.is(Kind::Or)) {
      for (int i = 0; i < 2; ++i) {
        path.push_back(i);
        const bool ok = antecedent(f.child(static_cast<std::size_t>(i)), path);
        path.pop_back();
        if (!ok) return false;
      }
      return true;
    }
    return block(f, path, cert.ant_blocks, ClassifyFailure::NotAntecedent, "antecedent");
  }

  bool succedent(const Formula& f, Path& path) {
    switch (f.kind()) {
      case Kind::Prop:
      case Kind::Top:
        return true;
      case Kind::Box: {
        path.push_back(0);
        const bool ok = succedent(f.body(), path);
        path.pop_back();
        return ok;
      }
      case Kind::And:
      case Kind::Or:
        for (int i = 0; i < 2; ++i) {
          path.push_back(i);
          const bool ok = succedent(f.child(static_cast<std::size_t>(i)), path);
          path.pop_back();
          if (!ok) return false;
        }
        return true;
      case Kind::Imp: {
        path.push_back(0);
        bool ok = block(f.lhs(), path, cert.suc_blocks, ClassifyFailure::NotSuccedent,
                        "succedent");
        path.back() = 1;
        ok = ok && succedent(f.rhs(), path);
        path.pop_back();
        return ok;
      }
      default:
        fail(ClassifyFailure::NotSuccedent, "succedent subformula " + to_string(f) + " at " +
                                                path_string(path) +
                                                " is not generated by the succedent grammar");
        return false;
    }
  }
};

// Both polarities overall, and a negative occurrence of each variable in each
// residual inequality.
std::optional<ClassifyError> check_polarities(const Inequality& q) {
  std::map<std::string, std::pair<bool, bool>> seen;  // (positive, negative)
  for (const auto& occ : polarity_map(q)) {
    auto& [pos, neg] = seen[occ.name];
    (occ.polarity == Polarity::Positive ? pos : neg) = true;
  }
  for (const auto& [name, pn] : seen) {
    if (!pn.first || !pn.second) {
      return ClassifyError{ClassifyFailure::Polarity,
                           "variable " + name + " has no " + (pn.first ? "negative" : "positive") +
                               " occurrence"};
    }
  }
  for (const auto& residual : residual_shapes(q)) {
    std::map<std::string, bool> negative;
    for (const auto& occ : polarity_map(residual)) {
      negative[occ.name] = negative[occ.name] || occ.polarity == Polarity::Negative;
    }
    for (const auto& [name, neg] : negative) {
      if (!neg) {
        return ClassifyError{ClassifyFailure::Polarity,
                             "variable " + name +
                                 " has no negative occurrence in residual inequality " +
                                 to_string(residual)};
      }
    }
  }
  return std::nullopt;
}

bool replay_blocks(const std::vector<PiaBlock>& blocks, std::size_t& next, const Formula& f,
                   const Path& path, const OmegaOrder& omega) {
  if (next >= blocks.size()) return false;
  const PiaBlock& b = blocks[next++];
  if (b.path != path || !(b.formula == f)) return false;
  if (!b.main) return pia_grammar(f, std::nullopt, nullptr);
  const auto allowed = omega.below(*b.main);
  return pia_grammar(f, b.main, &allowed);
}

bool replay_ant(const Formula& f, Path& path, const InductiveCertificate& cert,
                std::size_t& next) {
  if (f.is(Kind::And) || f.is(Kind::Or)) {
    for (int i = 0; i < 2; ++i) {
      path.push_back(i);
      const bool ok = replay_ant(f.child(static_cast<std::size_t>(i)), path, cert, next);
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  }
  return replay_blocks(cert.ant_blocks, next, f, path, cert.omega);
}

bool replay_suc(const Formula& f, Path& path, const InductiveCertificate& cert,
                std::size_t& next) {
  switch (f.kind()) {
    case Kind::Prop:
    case Kind::Top:
      return true;
    case Kind::Box:
    case Kind::And:
    case Kind::Or:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        path.push_back(static_cast<int>(i));
        const bool ok = replay_suc(f.child(i), path, cert, next);
        path.pop_back();
        if (!ok) return false;
      }
      return true;
    case Kind::Imp: {
      path.push_back(0);
      bool ok = replay_blocks(cert.suc_blocks, next, f.lhs(), path, cert.omega);
      path.back() = 1;
      ok = ok && replay_suc(f.rhs(), path, cert, next);
      path.pop_back();
      return ok;
    }
    default:
      return false;
  }
}

}  // namespace

std::vector<Occurrence> polarity_map(const Formula& f) {
  std::vector<Occurrence> out;
  Path path;
  collect_polarity(f, path, false, out);
  return out;
}

std::vector<Occurrence> polarity_map(const Inequality& q) {
  std::vector<Occurrence> out;
  Path path{0};
  collect_polarity(q.lhs, path, true, out);
  path = {1};
  collect_polarity(q.rhs, path, false, out);
  return out;
}

bool positive_in(const Formula& f, std::string_view p) {
  return !occurs_with(f, p, false, Polarity::Negative);
}

bool negative_in(const Formula& f, std::string_view p) {
  return !occurs_with(f, p, false, Polarity::Positive);
}

bool is_pos(const Formula& f, const std::set<std::string>& allowed) {
  return pos_grammar(f, &allowed);
}

bool is_pos(const Formula& f) { return pos_grammar(f, nullptr); }

std::optional<ConstraintSet> parse_pia(const Formula& f, std::string_view p) {
  ConstraintSet out;
  const Formula* cur = &f;
  for (;;) {
    switch (cur->kind()) {
      case Kind::Prop:
        if (cur->name() != p) return std::nullopt;
        return out;
      case Kind::Top:
        return out;
      case Kind::Box:
        cur = &cur->body();
        break;
      case Kind::Imp:
        if (!is_pos(cur->lhs())) return std::nullopt;
        for (const auto& q : props(cur->lhs())) {
          if (q == p) return std::nullopt;
          out.insert({q, std::string(p)});
        }
        cur = &cur->rhs();
        break;
      default:
        return std::nullopt;
    }
  }
}

void OmegaOrder::add(std::string lower, std::string upper) {
  edges_.insert({std::move(lower), std::move(upper)});
}

bool OmegaOrder::less(std::string_view lower, std::string_view upper) const {
  return below(upper).contains(std::string(lower));
}

std::set<std::string> OmegaOrder::below(std::string_view p) const {
  std::set<std::string> out;
  std::vector<std::string> stack{std::string(p)};
  while (!stack.empty()) {
    const std::string cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& e : edges_) {
      if (e.upper == cur && out.insert(e.lower).second) stack.push_back(e.lower);
    }
  }
  return out;
}

std::optional<std::vector<std::string>> OmegaOrder::find_cycle() const {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& e : edges_) {
    succ[e.lower].push_back(e.upper);
    succ[e.upper];
  }
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> cycle;

  std::function<bool(const std::string&)> visit = [&](const std::string& v) {
    mark[v] = Mark::Grey;
    stack.push_back(v);
    for (const auto& w : succ[v]) {
      if (mark[w] == Mark::Grey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle = std::vector<std::string>(it, stack.end());
        cycle->push_back(w);
        return true;
      }
      if (mark[w] == Mark::White && visit(w)) return true;
    }
    stack.pop_back();
    mark[v] = Mark::Black;
    return false;
  };
  for (const auto& [v, _] : succ) {
    if (mark[v] == Mark::White && visit(v)) return cycle;
  }
  return std::nullopt;
}

std::vector<Inequality> residual_shapes(const Inequality& q) {
  std::vector<Inequality> out;
  const auto alternatives = ant_alternatives(q.lhs);
  for (const auto& component : suc_components(q.rhs)) {
    for (const auto& alt : alternatives) {
      Formula lhs = alt.front();
      for (std::size_t i = 1; i < alt.size(); ++i) lhs = Formula::conj(lhs, alt[i]);
      out.push_back({lhs, component});
    }
  }
  return out;
}

Classification check_inductive(const Inequality& q) {
  if (!is_base(q)) {
    return {std::nullopt,
            ClassifyError{ClassifyFailure::NotBaseLanguage,
                          "input uses F, nominals, conominals or bdiam, which are not part of "
                          "the base language"}};
  }
  Walker w;
  Path path;
  if (!w.antecedent(q.lhs, path) || !w.succedent(q.rhs, path)) return {std::nullopt, w.error};

  w.cert.omega = OmegaOrder(w.constraints);
  if (const auto cycle = w.cert.omega.find_cycle()) {
    std::string msg = "dependence constraints form a cycle: ";
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      if (i > 0) msg += " < ";
      msg += (*cycle)[i];
    }
    return {std::nullopt, ClassifyError{ClassifyFailure::CyclicOrder, msg}};
  }
  if (auto err = check_polarities(q)) return {std::nullopt, std::move(err)};
  return {std::move(w.cert), std::nullopt};
}

bool replay_certificate(const Inequality& q, const InductiveCertificate& cert) {
  if (!is_base(q) || !cert.omega.acyclic()) return false;
  Path path;
  std::size_t next = 0;
  if (!replay_ant(q.lhs, path, cert, next) || next != cert.ant_blocks.size()) return false;
  next = 0;
  if (!replay_suc(q.rhs, path, cert, next) || next != cert.suc_blocks.size()) return false;
  return !check_polarities(q).has_value();
}

std::string to_string(ClassifyFailure kind) {
  switch (kind) {
    case ClassifyFailure::NotBaseLanguage:
      return "not-base-language";
    case ClassifyFailure::NotAntecedent:
      return "not-antecedent";
    case ClassifyFailure::NotSuccedent:
      return "not-succedent";
    case ClassifyFailure::CyclicOrder:
      return "cyclic-order";
    case ClassifyFailure::Polarity:
      return "polarity";
  }
  return "unknown";
}

}  // namespace alba
