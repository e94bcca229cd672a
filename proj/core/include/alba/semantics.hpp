// Finite Kripke semantics for the expanded language and the first-order
// correspondence language, plus exhaustive frame-level checks.
//
// On a finite frame with the discrete topology every subset is admissible,
// so valuations range over the full powerset of worlds.

#ifndef ALBA_SEMANTICS_HPP_
#define ALBA_SEMANTICS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alba/fol.hpp"
#include "alba/syntax.hpp"

namespace alba {

using World = int;
// Bit w is set iff world w is in the set.
using WorldSet = std::uint64_t;

inline constexpr int kMaxWorlds = 8;

class FiniteFrame {
 public:
  // Throws std::invalid_argument unless 1 <= n <= kMaxWorlds and every edge
  // is in range.
  FiniteFrame(int n, const std::vector<std::pair<World, World>>& edges);
  // Relation bit u*n+v of `code` encodes (u,v); codes range over [0, 2^(n*n)).
  static FiniteFrame from_index(int n, std::uint64_t code);
  static std::uint64_t relation_count(int n) { return std::uint64_t{1} << (n * n); }

  int size() const noexcept { return n_; }
  WorldSet all() const noexcept { return (WorldSet{1} << n_) - 1; }
  bool related(World u, World v) const { return (succ_[u] >> v) & 1U; }
  WorldSet successors(World u) const { return succ_[u]; }
  WorldSet predecessors(World v) const { return pred_[v]; }
  std::vector<std::pair<World, World>> edges() const;

  friend bool operator==(const FiniteFrame&, const FiniteFrame&) = default;

 private:
  int n_;
  std::vector<WorldSet> succ_;
  std::vector<WorldSet> pred_;
};

// "n=2 R={(0,1),(1,1)}"
std::string to_string(const FiniteFrame& frame);

// A conominal m is stored as the world it excludes: its truth set is the
// complement of {conominals[m]}.
struct Valuation {
  std::map<std::string, WorldSet, std::less<>> props;
  std::map<std::string, World, std::less<>> nominals;
  std::map<std::string, World, std::less<>> conominals;
};

struct Model {
  FiniteFrame frame;
  Valuation valuation;
};

class UnassignedSymbol : public std::out_of_range {
 public:
  explicit UnassignedSymbol(const std::string& name)
      : std::out_of_range("no value assigned to " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Truth set of phi.
WorldSet extension(const Model& m, const Formula& phi);
bool eval(const Model& m, World w, const Formula& phi);
bool holds_ineq(const Model& m, const Inequality& q);
bool holds_quasi(const Model& m, const QuasiInequality& q);

// Validity under every valuation of the symbols occurring in q.
bool frame_valid(const FiniteFrame& frame, const Inequality& q);

// Values for free variables and constants, both looked up by name.
using Assignment = std::map<std::string, World, std::less<>>;

// A first-order formula compiled against a fixed set of free names, for
// repeated evaluation over many frames.
class FoEvaluator {
 public:
  explicit FoEvaluator(const FoFormula& f);
  // Throws UnassignedSymbol if a free name is missing from `a`.
  bool operator()(const FiniteFrame& frame, const Assignment& a = {}) const;

  struct Node;

 private:
  std::vector<std::string> free_names_;
  std::shared_ptr<const Node> root_;
  int slots_ = 0;
};

bool eval_fo(const FiniteFrame& frame, const FoFormula& f, const Assignment& a = {});
bool eval_fo(const FiniteFrame& frame, const FoSentence& s);

struct Counterexample {
  FiniteFrame frame;
  bool modal_valid;
  bool fo_true;
};

struct CorrespondenceReport {
  int max_n = 0;
  std::uint64_t frames_checked = 0;
  std::optional<Counterexample> counterexample;

  bool agree() const noexcept { return !counterexample.has_value(); }
};

// Compares frame validity of q with truth of s on every frame with at most
// max_n worlds, stopping at the first disagreement.
CorrespondenceReport correspondence_check(const Inequality& q, const FoSentence& s, int max_n = 3);

}  // namespace alba

#endif  // ALBA_SEMANTICS_HPP_
