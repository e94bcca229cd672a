#include "generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace alba::testing {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("ALBA_SEED"); s != nullptr && *s != '\0') {
    return std::strtoull(s, nullptr, 10);
  }
  return fallback;
}

Rng make_rng(std::uint64_t salt) { return Rng(seed_from_env() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

Formula random_atom(Rng& rng, const Alphabet& a) {
  std::vector<Formula> atoms{Formula::top()};
  if (a.bot) atoms.push_back(Formula::bot());
  for (const auto& p : a.props) atoms.push_back(Formula::prop(p));
  for (const auto& i : a.nominals) atoms.push_back(Formula::nom(i));
  for (const auto& m : a.conominals) atoms.push_back(Formula::conom(m));
  return pick(rng, atoms);
}

// Generator state for one inductive sample.
struct InductiveBuilder {
  Rng& rng;
  std::vector<std::string> vars;
  OmegaOrder omega;

  Formula pos(const std::set<std::string>& allowed, int depth) {
    if (depth == 0 || chance(rng, 0.5)) {
      if (allowed.empty() || chance(rng, 0.1)) return Formula::top();
      const std::vector<std::string> xs(allowed.begin(), allowed.end());
      return Formula::prop(pick(rng, xs));
    }
    switch (uniform(rng, 0, 2)) {
      case 0:
        return Formula::box(pos(allowed, depth - 1));
      case 1:
        return Formula::conj(pos(allowed, depth - 1), pos(allowed, depth - 1));
      default:
        return Formula::disj(pos(allowed, depth - 1), pos(allowed, depth - 1));
    }
  }

  Formula pia(const std::string& p, int depth) {
    if (depth == 0 || chance(rng, 0.25)) {
      return chance(rng, 0.08) ? Formula::top() : Formula::prop(p);
    }
    if (chance(rng, 0.5)) return Formula::box(pia(p, depth - 1));
    const auto allowed = omega.below(p);
    return Formula::imp(pos(allowed, depth - 1), pia(p, depth - 1));
  }

  Formula ant(int depth) {
    if (depth == 0 || chance(rng, 0.6)) return pia(pick(rng, vars), depth);
    Formula a = ant(depth - 1);
    Formula b = ant(depth - 1);
    return chance(rng, 0.5) ? Formula::conj(a, b) : Formula::disj(a, b);
  }

  // A conjunction holding one block per variable, in random order and
  // shape, so that every variable has an occurrence in every residual.
  Formula guided_ant(int depth) {
    std::vector<Formula> parts;
    const int block_depth = std::max(0, depth - (vars.size() > 1 ? 2 : 0));
    for (const auto& v : vars) parts.push_back(pia(v, uniform(rng, 0, block_depth)));
    if (chance(rng, 0.3)) parts.push_back(ant(block_depth));
    std::shuffle(parts.begin(), parts.end(), rng);
    while (parts.size() > 1) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(parts.size()) - 2));
      parts[i] = Formula::conj(parts[i], parts[i + 1]);
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return parts.front();
  }

  Formula suc(int depth) {
    if (depth == 0 || chance(rng, 0.3)) {
      return chance(rng, 0.08) ? Formula::top() : Formula::prop(pick(rng, vars));
    }
    switch (uniform(rng, 0, 3)) {
      case 0:
        return Formula::box(suc(depth - 1));
      case 1:
        return Formula::conj(suc(depth - 1), suc(depth - 1));
      case 2:
        return Formula::disj(suc(depth - 1), suc(depth - 1));
      default:
        return Formula::imp(pia(pick(rng, vars), depth - 1), suc(depth - 1));
    }
  }
};

struct Occ {
  std::string name;
  bool negative;
};

void occurrences(const Formula& f, bool negative, std::vector<Occ>& out) {
  if (f.is(Kind::Prop)) {
    out.push_back({f.name(), negative});
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    occurrences(f.child(i), negative != (f.is(Kind::Imp) && i == 0), out);
  }
}

using Choice = std::vector<Occ>;

std::vector<Choice> product(const std::vector<Choice>& xs, const std::vector<Choice>& ys) {
  std::vector<Choice> out;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      Choice c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Choice> unite(std::vector<Choice> xs, const std::vector<Choice>& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  return xs;
}

// Occurrences kept by each way of picking a disjunct at every \/ of the
// antecedent skeleton (lhs of <=, hence flipped).
std::vector<Choice> antecedent_choices(const Formula& f) {
  if (f.is(Kind::Or)) return unite(antecedent_choices(f.lhs()), antecedent_choices(f.rhs()));
  if (f.is(Kind::And)) return product(antecedent_choices(f.lhs()), antecedent_choices(f.rhs()));
  Choice c;
  occurrences(f, true, c);
  return {c};
}

// Occurrences kept by each way of picking a conjunct at every /\ of the
// succedent skeleton.
std::vector<Choice> succedent_choices(const Formula& f) {
  switch (f.kind()) {
    case Kind::And:
      return unite(succedent_choices(f.lhs()), succedent_choices(f.rhs()));
    case Kind::Or:
      return product(succedent_choices(f.lhs()), succedent_choices(f.rhs()));
    case Kind::Box:
      return succedent_choices(f.body());
    case Kind::Imp: {
      Choice block;
      occurrences(f.lhs(), true, block);
      return product({block}, succedent_choices(f.rhs()));
    }
    default: {
      Choice c;
      occurrences(f, false, c);
      return {c};
    }
  }
}

}  // namespace

Formula random_formula(Rng& rng, int max_depth, const Alphabet& alphabet) {
  if (max_depth == 0 || chance(rng, 0.25)) return random_atom(rng, alphabet);
  switch (uniform(rng, 0, 5)) {
    case 0:
      return Formula::imp(random_formula(rng, max_depth - 1, alphabet),
                          random_formula(rng, max_depth - 1, alphabet));
    case 1:
      return Formula::conj(random_formula(rng, max_depth - 1, alphabet),
                           random_formula(rng, max_depth - 1, alphabet));
    case 2:
      return Formula::disj(random_formula(rng, max_depth - 1, alphabet),
                           random_formula(rng, max_depth - 1, alphabet));
    case 3:
      return Formula::box(random_formula(rng, max_depth - 1, alphabet));
    default:
      return Formula::bdiam(random_formula(rng, max_depth - 1, alphabet));
  }
}

Formula random_pure_formula(Rng& rng, int max_depth) {
  Alphabet a;
  a.props.clear();
  return random_formula(rng, max_depth, a);
}

bool residual_polarity_ok(const Inequality& q) {
  std::vector<Occ> all;
  occurrences(q.lhs, true, all);
  occurrences(q.rhs, false, all);
  std::map<std::string, std::pair<bool, bool>> seen;
  for (const auto& o : all) (o.negative ? seen[o.name].second : seen[o.name].first) = true;
  for (const auto& [_, pn] : seen) {
    if (!pn.first || !pn.second) return false;
  }
  const auto ants = antecedent_choices(q.lhs);
  for (const auto& suc : succedent_choices(q.rhs)) {
    for (const auto& ant : ants) {
      std::map<std::string, bool> negative;
      for (const auto* part : {&ant, &suc}) {
        for (const auto& o : *part) negative[o.name] = negative[o.name] || o.negative;
      }
      for (const auto& [_, neg] : negative) {
        if (!neg) return false;
      }
    }
  }
  return true;
}

InductiveSample random_inductive(Rng& rng, int max_depth, int max_vars) {
  static const std::vector<std::string> kNames{"p", "q", "r"};
  const int k = uniform(rng, 1, std::min<int>(max_vars, static_cast<int>(kNames.size())));
  for (;;) {
    InductiveBuilder b{rng, {}, {}};
    b.vars.assign(kNames.begin(), kNames.begin() + k);
    std::vector<std::string> order = b.vars;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (chance(rng, 0.5)) b.omega.add(order[i], order[j]);
      }
    }
    const int ant_depth = uniform(rng, 0, max_depth);
    Inequality q{chance(rng, 0.7) ? b.guided_ant(ant_depth) : b.ant(ant_depth),
                 b.suc(uniform(rng, 0, max_depth))};
    if (static_cast<int>(props(q).size()) != k) continue;
    if (static_cast<int>(std::max(depth(q.lhs), depth(q.rhs))) > max_depth) continue;
    if (!residual_polarity_ok(q)) continue;
    return {q, b.omega};
  }
}

Model random_model(Rng& rng, int n, const std::vector<std::string>& props,
                   const std::vector<std::string>& nominals,
                   const std::vector<std::string>& conominals) {
  Model m{random_frame(rng, n), {}};
  const WorldSet all = m.frame.all();
  for (const auto& p : props) {
    m.valuation.props[p] = std::uniform_int_distribution<WorldSet>(0, all)(rng);
  }
  for (const auto& i : nominals) m.valuation.nominals[i] = uniform(rng, 0, n - 1);
  for (const auto& c : conominals) m.valuation.conominals[c] = uniform(rng, 0, n - 1);
  return m;
}

FiniteFrame random_frame(Rng& rng, int n) {
  const std::uint64_t count = FiniteFrame::relation_count(n);
  return FiniteFrame::from_index(n, std::uniform_int_distribution<std::uint64_t>(0, count - 1)(rng));
}

const std::vector<std::string>& inductive_corpus() {
  static const std::vector<std::string> kCorpus{
      "T <= box(box p -> p)",
      "box p <= p",
      "box p <= box box p",
      "p <= box p",
      "box box p <= box p",
      "p /\\ q <= q /\\ p",
      "p <= p",
      "T <= box p -> p",
      "box(p -> q) <= box p -> box q",
      "(q -> box p) /\\ q <= box p",
      "box(q -> p) /\\ box q <= box box p",
      "box p <= p \\/ box box p",
      "p \\/ box p <= box p",
      "box p /\\ box q <= box(p /\\ q)",
      "T <= box(box p -> p) /\\ (box p -> p)",
  };
  return kCorpus;
}

}  // namespace alba::testing
