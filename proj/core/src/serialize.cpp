#include "alba/serialize.hpp"

#include <stdexcept>

namespace alba {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field \"") + key + "\" is not a string");
  return v.get<std::string>();
}

Json strings(const std::vector<Inequality>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

std::vector<Inequality> inequalities_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of inequalities");
  std::vector<Inequality> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw std::invalid_argument("inequality is not a string");
    out.push_back(parse_inequality(s.get<std::string>()));
  }
  return out;
}

Json term_json(const Term& t) { return Json{{t.is_var() ? "var" : "const", t.name}}; }

Term term_from(const Json& j) {
  if (j.is_object() && j.contains("var")) return Term::var(string_field(j, "var"));
  if (j.is_object() && j.contains("const")) return Term::constant(string_field(j, "const"));
  throw std::invalid_argument("term must be {\"var\": ...} or {\"const\": ...}");
}

Json blocks_json(const std::vector<PiaBlock>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) {
    out.push_back({{"path", b.path},
                   {"main", b.main ? Json(*b.main) : Json(nullptr)},
                   {"formula", to_string(b.formula)}});
  }
  return out;
}

}  // namespace

Json to_json(const QuasiInequality& q) {
  return {{"antecedents", strings(q.antecedents)}, {"conclusion", to_string(q.conclusion)}};
}

QuasiInequality quasi_from_json(const Json& j) {
  return {inequalities_from(field(j, "antecedents")),
          parse_inequality(string_field(j, "conclusion"))};
}

Json to_json(const TraceStep& step) {
  Json out{{"rule", to_string(step.rule)},
           {"consumed", strings(step.consumed)},
           {"produced", strings(step.produced)}};
  if (step.subst) {
    out["subst"] = {{"var", step.subst->var}, {"formula", to_string(step.subst->formula)}};
  }
  return out;
}

Json to_json(const Trace& trace) {
  Json out = Json::array();
  for (const auto& s : trace) out.push_back(to_json(s));
  return out;
}

Trace trace_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("trace must be an array");
  Trace out;
  for (const auto& s : j) {
    const auto rule = rule_from_string(string_field(s, "rule"));
    if (!rule) throw std::invalid_argument("unknown rule " + string_field(s, "rule"));
    TraceStep step{*rule, inequalities_from(field(s, "consumed")),
                   inequalities_from(field(s, "produced")), std::nullopt};
    if (s.contains("subst")) {
      const Json& sub = s.at("subst");
      step.subst = Substitution{string_field(sub, "var"),
                                parse_formula(string_field(sub, "formula"))};
    }
    out.push_back(std::move(step));
  }
  return out;
}

Json to_json(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::Rel:
    case FoKind::Eq:
    case FoKind::Neq: {
      const char* op = f.is(FoKind::Rel) ? "R" : f.is(FoKind::Eq) ? "eq" : "neq";
      return {{"op", op}, {"args", {term_json(f.terms()[0]), term_json(f.terms()[1])}}};
    }
    case FoKind::True:
      return {{"op", "true"}};
    case FoKind::False:
      return {{"op", "false"}};
    case FoKind::Not:
      return {{"op", "not"}, {"arg", to_json(f.operand(0))}};
    case FoKind::And:
    case FoKind::Or:
    case FoKind::Imp: {
      Json args = Json::array();
      for (const auto& k : f.operands()) args.push_back(to_json(k));
      const char* op = f.is(FoKind::And) ? "and" : f.is(FoKind::Or) ? "or" : "imp";
      return {{"op", op}, {"args", std::move(args)}};
    }
    case FoKind::Forall:
    case FoKind::Exists:
      return {{"op", f.is(FoKind::Forall) ? "forall" : "exists"},
              {"var", f.var()},
              {"body", to_json(f.body())}};
  }
  return nullptr;
}

FoFormula fo_from_json(const Json& j) {
  const std::string op = string_field(j, "op");
  if (op == "true") return FoFormula::truth();
  if (op == "false") return FoFormula::falsity();
  if (op == "not") return FoFormula::negation(fo_from_json(field(j, "arg")));
  if (op == "forall" || op == "exists") {
    FoFormula body = fo_from_json(field(j, "body"));
    const std::string var = string_field(j, "var");
    return op == "forall" ? FoFormula::forall(var, std::move(body))
                          : FoFormula::exists(var, std::move(body));
  }
  const Json& args = field(j, "args");
  if (!args.is_array()) throw std::invalid_argument("\"args\" must be an array");
  if (op == "R" || op == "eq" || op == "neq") {
    if (args.size() != 2) throw std::invalid_argument(op + " takes two arguments");
    Term a = term_from(args[0]);
    Term b = term_from(args[1]);
    if (op == "R") return FoFormula::rel(std::move(a), std::move(b));
    if (op == "eq") return FoFormula::eq(std::move(a), std::move(b));
    return FoFormula::neq(std::move(a), std::move(b));
  }
  std::vector<FoFormula> kids;
  for (const auto& a : args) kids.push_back(fo_from_json(a));
  if (op == "and") return FoFormula::conj(std::move(kids));
  if (op == "or") return FoFormula::disj(std::move(kids));
  if (op == "imp") {
    if (kids.size() != 2) throw std::invalid_argument("imp takes two arguments");
    return FoFormula::imp(std::move(kids[0]), std::move(kids[1]));
  }
  throw std::invalid_argument("unknown operator " + op);
}

Json to_json(const FoSentence& s) {
  return {{"text", to_string(s)}, {"promoted", s.promoted}, {"ast", to_json(s.formula)}};
}

FoSentence sentence_from_json(const Json& j) {
  FoSentence s{fo_from_json(field(j, "ast")), {}};
  const Json& promoted = field(j, "promoted");
  if (!promoted.is_array()) throw std::invalid_argument("\"promoted\" must be an array");
  for (const auto& p : promoted) {
    if (!p.is_string()) throw std::invalid_argument("promoted name is not a string");
    s.promoted.push_back(p.get<std::string>());
  }
  return s;
}

Json to_json(const Classification& c) {
  if (!c.inductive()) {
    return {{"inductive", false},
            {"kind", c.error ? to_string(c.error->kind) : "unknown"},
            {"reason", c.error ? c.error->message : ""}};
  }
  Json omega = Json::array();
  for (const auto& e : c.certificate->omega.edges()) omega.push_back({e.lower, e.upper});
  return {{"inductive", true},
          {"omega", std::move(omega)},
          {"ant_blocks", blocks_json(c.certificate->ant_blocks)},
          {"suc_blocks", blocks_json(c.certificate->suc_blocks)}};
}

Json to_json(const CorrespondenceReport& r) {
  Json out{{"max_n", r.max_n}, {"frames", r.frames_checked}, {"agree", r.agree()}};
  if (r.counterexample) {
    Json edges = Json::array();
    for (const auto& [u, v] : r.counterexample->frame.edges()) edges.push_back({u, v});
    out["counterexample"] = {{"n", r.counterexample->frame.size()},
                             {"edges", std::move(edges)},
                             {"modal_valid", r.counterexample->modal_valid},
                             {"fo_true", r.counterexample->fo_true}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace alba
