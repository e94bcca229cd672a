// Brute-force semantic oracles over small finite frames.

#ifndef ALBA_TESTS_ORACLES_HPP_
#define ALBA_TESTS_ORACLES_HPP_

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alba/engine.hpp"
#include "alba/semantics.hpp"

namespace alba::testing {

struct Symbols {
  std::set<std::string> props;
  std::set<std::string> nominals;
  std::set<std::string> conominals;
};

Symbols symbols_of(const std::vector<Inequality>& system);

// Calls fn for every valuation of `symbols` on `frame`, starting from `base`,
// until fn returns false. Returns false iff fn stopped the enumeration.
bool for_each_valuation(const FiniteFrame& frame, const Symbols& symbols, const Valuation& base,
                        const std::function<bool(const Valuation&)>& fn);

// The pairs (V(i0), excluded world of m0) for which some valuation of the
// remaining symbols satisfies every inequality of the system.
std::set<std::pair<World, World>> sat_projection(const FiniteFrame& frame,
                                                 const std::vector<Inequality>& system,
                                                 const std::string& i0, const std::string& m0);

// For an Ackermann step: under every valuation of the symbols other than the
// eliminated variable, "some value of the variable satisfies the consumed
// inequalities" iff "the produced inequalities hold".
bool ackermann_conditions_agree(const FiniteFrame& frame, const TraceStep& step);

}  // namespace alba::testing

#endif  // ALBA_TESTS_ORACLES_HPP_
