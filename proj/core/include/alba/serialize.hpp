// JSON encodings of quasi-inequalities, traces, first-order formulas,
// classification results and correspondence reports. Modal formulas are
// encoded as strings in the concrete syntax.

#ifndef ALBA_SERIALIZE_HPP_
#define ALBA_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "alba/classify.hpp"
#include "alba/engine.hpp"
#include "alba/fol.hpp"
#include "alba/semantics.hpp"

namespace alba {

using Json = nlohmann::ordered_json;

// Decoders throw std::invalid_argument (or ParseError for formula strings)
// on malformed documents.

// {"antecedents": [string], "conclusion": string}
Json to_json(const QuasiInequality& q);
QuasiInequality quasi_from_json(const Json& j);

// {"rule", "consumed": [string], "produced": [string], "subst"?: {"var", "formula"}}
Json to_json(const TraceStep& step);
Json to_json(const Trace& trace);
Trace trace_from_json(const Json& j);

// {"op": "forall"|"exists", "var", "body"}, {"op": "R"|"eq"|"neq", "args"},
// {"op": "true"|"false"}, {"op": "not", "arg"}, {"op": "and"|"or"|"imp", "args"};
// terms are {"var": name} or {"const": name}.
Json to_json(const FoFormula& f);
FoFormula fo_from_json(const Json& j);

// {"text", "promoted": [string], "ast"}
Json to_json(const FoSentence& s);
FoSentence sentence_from_json(const Json& j);

// {"inductive": true, "omega": [[lower, upper]], "ant_blocks": [...], "suc_blocks": [...]}
// or {"inductive": false, "kind", "reason"}.
Json to_json(const Classification& c);

// {"max_n", "frames", "agree", "counterexample": null | {"n", "edges", "modal_valid", "fo_true"}}
Json to_json(const CorrespondenceReport& r);

}  // namespace alba

#endif  // ALBA_SERIALIZE_HPP_
