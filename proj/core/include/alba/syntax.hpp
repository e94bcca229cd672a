// Formulas of the generalized modal language (->, /\, \/, T, box) and of the
// expanded language used by the correspondence engine (adds F, nominals,
// conominals and the black diamond, i.e. the diamond along R^-1).

#ifndef ALBA_SYNTAX_HPP_
#define ALBA_SYNTAX_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alba {

enum class Kind : std::uint8_t {
  Prop,
  Top,
  Bot,
  Nom,
  CoNom,
  Imp,
  And,
  Or,
  Box,
  BlackDiamond,
};

// Immutable formula tree with shared structure. Copies are cheap; equality is
// structural.
class Formula {
 public:
  static Formula prop(std::string name);
  static Formula top();
  static Formula bot();
  static Formula nom(std::string name);
  static Formula conom(std::string name);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula box(Formula body);
  static Formula bdiam(Formula body);

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }
  bool is_atom() const noexcept { return node_->kids.empty(); }
  bool is_unary() const noexcept { return node_->kids.size() == 1; }
  bool is_binary() const noexcept { return node_->kids.size() == 2; }

  // Name of a Prop, Nom or CoNom; empty for other kinds.
  const std::string& name() const noexcept { return node_->name; }
  const Formula& lhs() const { return node_->kids.at(0); }
  const Formula& rhs() const { return node_->kids.at(1); }
  const Formula& body() const { return node_->kids.at(0); }
  const Formula& child(std::size_t i) const { return node_->kids.at(i); }
  std::size_t arity() const noexcept { return node_->kids.size(); }

  std::size_t hash() const noexcept { return node_->hash; }
  // Number of nodes in the tree.
  std::size_t size() const noexcept { return node_->size; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> kids;
    std::size_t hash = 0;
    std::size_t size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

// Depth counts connectives: atoms have depth 0.
std::size_t depth(const Formula& f);

// True iff no Prop occurs.
bool is_pure(const Formula& f);
// True iff f uses only Prop, T, ->, /\, \/ and box.
bool is_base(const Formula& f);

std::set<std::string> props(const Formula& f);
std::set<std::string> nominals(const Formula& f);
std::set<std::string> conominals(const Formula& f);
bool mentions_prop(const Formula& f, std::string_view p);

// Uniform substitution of eta for every occurrence of Prop(p).
Formula substitute(const Formula& f, std::string_view p, const Formula& eta);

struct Inequality {
  Formula lhs;
  Formula rhs;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

bool is_pure(const Inequality& q);
bool is_base(const Inequality& q);
std::set<std::string> props(const Inequality& q);
bool mentions_prop(const Inequality& q, std::string_view p);
Inequality substitute(const Inequality& q, std::string_view p,
                      const Formula& eta);

struct QuasiInequality {
  std::vector<Inequality> antecedents;
  Inequality conclusion;

  friend bool operator==(const QuasiInequality&,
                         const QuasiInequality&) = default;
};

bool is_pure(const QuasiInequality& q);

enum class SymbolKind : std::uint8_t { Prop, Nominal, Conominal };

// Names already in use, per kind. fresh() hands out the smallest unused
// index in the kind's namespace: p<k>, i<k>, m<k>.
class SymbolPool {
 public:
  void add(SymbolKind kind, std::string name);
  void add_symbols(const Formula& f);
  void add_symbols(const Inequality& q);

  bool contains(SymbolKind kind, std::string_view name) const;
  const std::set<std::string, std::less<>>& used(SymbolKind kind) const {
    return used_[index(kind)];
  }

  std::string fresh(SymbolKind kind);

 private:
  static std::size_t index(SymbolKind kind) {
    return static_cast<std::size_t>(kind);
  }
  std::array<std::set<std::string, std::less<>>, 3> used_;
};

// Lexical classes of identifiers in the concrete syntax.
bool is_nominal_name(std::string_view s);
bool is_conominal_name(std::string_view s);
bool is_prop_name(std::string_view s);

// Orders names by alphabetic prefix, then numerically by trailing digits, so
// that i2 < i10 < m0.
bool natural_less(std::string_view a, std::string_view b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             std::string found);

  // Byte offset into the input.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

Formula parse_formula(std::string_view text);
Inequality parse_inequality(std::string_view text);

std::string to_string(const Formula& f);
std::string to_string(const Inequality& q);
std::string to_string(const QuasiInequality& q);

std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Inequality& q);
std::ostream& operator<<(std::ostream& os, const QuasiInequality& q);

}  // namespace alba

#endif  // ALBA_SYNTAX_HPP_
