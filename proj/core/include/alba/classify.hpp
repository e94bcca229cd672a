// Polarity, the positive / PIA / antecedent / succedent grammars, and
// recognition of inductive inequalities together with a dependence order
// witnessing them.

#ifndef ALBA_CLASSIFY_HPP_
#define ALBA_CLASSIFY_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alba/syntax.hpp"

namespace alba {

enum class Polarity { Positive, Negative };

// Child indices from the root: 0 = left/only child, 1 = right child.
using Path = std::vector<int>;

struct Occurrence {
  Path path;
  std::string name;
  Polarity polarity;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Every Prop occurrence with its polarity: positive iff it sits under an even
// number of left-hand sides of implications. box, black diamond, /\ and \/
// do not flip.
std::vector<Occurrence> polarity_map(const Formula& f);

// Polarity of every occurrence reading lhs <= rhs as lhs -> rhs, so lhs
// occurrences are flipped. Paths start with 0 for lhs and 1 for rhs.
std::vector<Occurrence> polarity_map(const Inequality& q);

// True iff p occurs only positively (vacuously true if p is absent).
bool positive_in(const Formula& f, std::string_view p);
// True iff p occurs only negatively (vacuously true if p is absent).
bool negative_in(const Formula& f, std::string_view p);

// Membership in POS_A ::= p | T | box POS | POS /\ POS | POS \/ POS with
// variables drawn from `allowed`.
bool is_pos(const Formula& f, const std::set<std::string>& allowed);
// Same grammar with no restriction on the variables.
bool is_pos(const Formula& f);

// `lower` must precede `upper` in the dependence order.
struct Constraint {
  std::string lower;
  std::string upper;

  friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

using ConstraintSet = std::set<Constraint>;

// Parses f as PIA_p ::= p | T | box PIA_p | POS -> PIA_p for main variable p.
// Every variable of a POS block must precede p, so each one contributes a
// constraint; nullopt when f is not of that shape or a POS block mentions p.
std::optional<ConstraintSet> parse_pia(const Formula& f, std::string_view p);

// The strict dependence order, stored as its generating edges; comparisons
// use the transitive closure.
class OmegaOrder {
 public:
  OmegaOrder() = default;
  explicit OmegaOrder(const ConstraintSet& edges) : edges_(edges) {}

  void add(std::string lower, std::string upper);
  const ConstraintSet& edges() const noexcept { return edges_; }

  // lower <_Omega upper in the transitive closure.
  bool less(std::string_view lower, std::string_view upper) const;
  // A directed cycle, first vertex repeated at the end; nullopt if acyclic.
  std::optional<std::vector<std::string>> find_cycle() const;
  bool acyclic() const { return !find_cycle().has_value(); }
  // Everything strictly below p.
  std::set<std::string> below(std::string_view p) const;

  friend bool operator==(const OmegaOrder&, const OmegaOrder&) = default;

 private:
  ConstraintSet edges_;
};

// A PIA subformula of the antecedent or succedent together with its main
// variable. Blocks that end in T have no main variable: they impose no
// dependence constraint and are removed by the deleting rule.
struct PiaBlock {
  Path path;
  std::optional<std::string> main;
  Formula formula;
};

struct InductiveCertificate {
  OmegaOrder omega;
  std::vector<PiaBlock> ant_blocks;  // paths relative to the lhs
  std::vector<PiaBlock> suc_blocks;  // paths relative to the rhs
};

enum class ClassifyFailure {
  NotBaseLanguage,
  NotAntecedent,
  NotSuccedent,
  CyclicOrder,
  Polarity,
};

struct ClassifyError {
  ClassifyFailure kind;
  std::string message;
};

struct Classification {
  std::optional<InductiveCertificate> certificate;
  std::optional<ClassifyError> error;

  bool inductive() const noexcept { return certificate.has_value(); }
};

// Recognizes Ant <= Suc inequalities whose collected dependence constraints
// are acyclic and in which every variable has a negative occurrence (lhs
// flipped) in each residual inequality left after distribution and
// splitting, and a positive and a negative occurrence overall.
Classification check_inductive(const Inequality& q);

// Re-validates a certificate against the grammars, using the certificate's
// order to fix A_p for each block.
bool replay_certificate(const Inequality& q, const InductiveCertificate& cert);

// Residual inequalities as the distribution and splitting rules would leave
// them, computed structurally: one per choice of a disjunct of the
// antecedent's \/-/\ normal form and a conjunct of the succedent's.
std::vector<Inequality> residual_shapes(const Inequality& q);

std::string to_string(ClassifyFailure kind);

}  // namespace alba

#endif  // ALBA_CLASSIFY_HPP_
