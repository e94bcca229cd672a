#include "alba/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace alba {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void collect(const Formula& f, Kind kind, std::set<std::string>& out) {
  if (f.is(kind)) out.insert(f.name());
  for (std::size_t i = 0; i < f.arity(); ++i) collect(f.child(i), kind, out);
}

std::set<std::string> names_of(const Formula& f, Kind kind) {
  std::set<std::string> out;
  collect(f, kind, out);
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> kids) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::string>{}(node->name));
  for (const Formula& k : kids) {
    h = mix(h, k.hash());
    node->size += k.size();
  }
  node->hash = h;
  node->kids = std::move(kids);
  return Formula(std::move(node));
}

Formula Formula::prop(std::string name) { return make(Kind::Prop, std::move(name), {}); }
Formula Formula::top() { return make(Kind::Top, {}, {}); }
Formula Formula::bot() { return make(Kind::Bot, {}, {}); }
Formula Formula::nom(std::string name) { return make(Kind::Nom, std::move(name), {}); }
Formula Formula::conom(std::string name) { return make(Kind::CoNom, std::move(name), {}); }
Formula Formula::imp(Formula lhs, Formula rhs) {
  return make(Kind::Imp, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::conj(Formula lhs, Formula rhs) {
  return make(Kind::And, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return make(Kind::Or, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::box(Formula body) { return make(Kind::Box, {}, {std::move(body)}); }
Formula Formula::bdiam(Formula body) {
  return make(Kind::BlackDiamond, {}, {std::move(body)});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind() ||
      a.name() != b.name()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, 1 + depth(f.child(i)));
  return d;
}

bool is_pure(const Formula& f) {
  if (f.is(Kind::Prop)) return false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_pure(f.child(i))) return false;
  }
  return true;
}

bool is_base(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Nom:
    case Kind::CoNom:
    case Kind::BlackDiamond:
      return false;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_base(f.child(i))) return false;
  }
  return true;
}

std::set<std::string> props(const Formula& f) { return names_of(f, Kind::Prop); }
std::set<std::string> nominals(const Formula& f) { return names_of(f, Kind::Nom); }
std::set<std::string> conominals(const Formula& f) { return names_of(f, Kind::CoNom); }

bool mentions_prop(const Formula& f, std::string_view p) {
  if (f.is(Kind::Prop)) return f.name() == p;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (mentions_prop(f.child(i), p)) return true;
  }
  return false;
}

Formula substitute(const Formula& f, std::string_view p, const Formula& eta) {
  switch (f.kind()) {
    case Kind::Prop:
      return f.name() == p ? eta : f;
    case Kind::Top:
    case Kind::Bot:
    case Kind::Nom:
    case Kind::CoNom:
      return f;
    case Kind::Imp:
      return Formula::imp(substitute(f.lhs(), p, eta), substitute(f.rhs(), p, eta));
    case Kind::And:
      return Formula::conj(substitute(f.lhs(), p, eta), substitute(f.rhs(), p, eta));
    case Kind::Or:
      return Formula::disj(substitute(f.lhs(), p, eta), substitute(f.rhs(), p, eta));
    case Kind::Box:
      return Formula::box(substitute(f.body(), p, eta));
    case Kind::BlackDiamond:
      return Formula::bdiam(substitute(f.body(), p, eta));
  }
  return f;
}

bool is_pure(const Inequality& q) { return is_pure(q.lhs) && is_pure(q.rhs); }
bool is_base(const Inequality& q) { return is_base(q.lhs) && is_base(q.rhs); }

std::set<std::string> props(const Inequality& q) {
  auto out = props(q.lhs);
  out.merge(props(q.rhs));
  return out;
}

bool mentions_prop(const Inequality& q, std::string_view p) {
  return mentions_prop(q.lhs, p) || mentions_prop(q.rhs, p);
}

Inequality substitute(const Inequality& q, std::string_view p, const Formula& eta) {
  return {substitute(q.lhs, p, eta), substitute(q.rhs, p, eta)};
}

bool is_pure(const QuasiInequality& q) {
  return is_pure(q.conclusion) &&
         std::all_of(q.antecedents.begin(), q.antecedents.end(),
                     [](const Inequality& a) { return is_pure(a); });
}

void SymbolPool::add(SymbolKind kind, std::string name) {
  used_[index(kind)].insert(std::move(name));
}

void SymbolPool::add_symbols(const Formula& f) {
  switch (f.kind()) {
    case Kind::Prop:
      add(SymbolKind::Prop, f.name());
      break;
    case Kind::Nom:
      add(SymbolKind::Nominal, f.name());
      break;
    case Kind::CoNom:
      add(SymbolKind::Conominal, f.name());
      break;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) add_symbols(f.child(i));
  }
}

void SymbolPool::add_symbols(const Inequality& q) {
  add_symbols(q.lhs);
  add_symbols(q.rhs);
}

bool SymbolPool::contains(SymbolKind kind, std::string_view name) const {
  return used_[index(kind)].contains(name);
}

std::string SymbolPool::fresh(SymbolKind kind) {
  static constexpr std::array<char, 3> kPrefix = {'p', 'i', 'm'};
  const char prefix = kPrefix[index(kind)];
  for (std::size_t k = 0;; ++k) {
    std::string candidate = prefix + std::to_string(k);
    if (!contains(kind, candidate)) {
      add(kind, candidate);
      return candidate;
    }
  }
}

bool is_nominal_name(std::string_view s) {
  return s.size() >= 2 && s[0] == 'i' && all_digits(s.substr(1));
}

bool is_conominal_name(std::string_view s) {
  return s.size() >= 2 && s[0] == 'm' && all_digits(s.substr(1));
}

bool is_prop_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u)) return false;
  }
  if (s == "box" || s == "bdiam") return false;
  return !is_nominal_name(s) && !is_conominal_name(s);
}

bool natural_less(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    return std::pair{s.substr(0, cut), s.substr(cut)};
  };
  auto [pa, da] = split(a);
  auto [pb, db] = split(b);
  if (pa != pb) return pa < pb;
  // Compare digit runs numerically without overflow: strip leading zeros,
  // then longer means larger.
  auto strip = [](std::string_view d) {
    while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
    return d;
  };
  const auto sa = strip(da);
  const auto sb = strip(db);
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error([&] {
        std::string msg = "parse error at offset " + std::to_string(position) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
          msg += expected[i];
        }
        msg += ", found " + found;
        return msg;
      }()),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace alba
