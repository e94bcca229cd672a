#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include "alba/classify.hpp"
#include "alba/engine.hpp"
#include "alba/fol.hpp"
#include "alba/semantics.hpp"
#include "alba/serialize.hpp"

namespace alba::cli {

namespace {

std::string join(const std::vector<Inequality>& qs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(qs[i]);
  }
  return out;
}

std::string path_text(const Path& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(path[i]);
  }
  return s + "]";
}

bool wants(OutputKind have, OutputKind kind) { return have == kind || have == OutputKind::All; }

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  // Processes one input; `label` prefixes diagnostics in file mode.
  int process(const std::string& text, const std::string& label, Json* json) {
    Inequality q = Inequality{Formula::top(), Formula::top()};
    try {
      q = parse_inequality(text);
    } catch (const ParseError& e) {
      err_ << "error: " << label << e.what() << '\n';
      if (json) *json = Json{{"input", text}, {"status", "error"}, {"message", e.what()}};
      return kUsage;
    }
    if (config_.check_inductive) return classify(q, text, json);
    return correspond(q, text, json);
  }

 private:
  int classify(const Inequality& q, const std::string& text, Json* json) {
    const Classification c = check_inductive(q);
    if (json) {
      *json = Json{{"input", text}};
      json->update(to_json(c));
      return c.inductive() ? kOk : kFailure;
    }
    if (!c.inductive()) {
      out_ << "not inductive (" << to_string(c.error->kind) << "): " << c.error->message << '\n';
      return kFailure;
    }
    out_ << "inductive\n";
    out_ << "omega:";
    if (c.certificate->omega.edges().empty()) out_ << " (empty)";
    bool first = true;
    for (const auto& e : c.certificate->omega.edges()) {
      out_ << (first ? " " : ", ") << e.lower << " < " << e.upper;
      first = false;
    }
    out_ << '\n';
    const auto blocks = [&](const char* side, const std::vector<PiaBlock>& bs) {
      for (const auto& b : bs) {
        out_ << side << " block " << path_text(b.path) << ": " << to_string(b.formula);
        out_ << " (main " << (b.main ? *b.main : std::string("none")) << ")\n";
      }
    };
    blocks("antecedent", c.certificate->ant_blocks);
    blocks("succedent", c.certificate->suc_blocks);
    return kOk;
  }

  int correspond(const Inequality& q, const std::string& text, Json* json) {
    const AlbaResult result = run(q);
    if (result.status == Status::Failure) return failure(result, text, json);

    FoSentence fo = correspondent(result.quasis);
    if (config_.simplify) fo = simplify(fo);

    std::optional<CorrespondenceReport> report;
    if (config_.verify) report = correspondence_check(q, fo, *config_.verify);
    const int code = report ? exit_code_for(*report) : kOk;

    if (json) {
      *json = Json{{"input", text}, {"status", "success"}};
      if (wants(config_.output, OutputKind::Quasi)) {
        Json quasis = Json::array();
        for (const auto& qq : result.quasis) quasis.push_back(to_json(qq));
        (*json)["quasi"] = std::move(quasis);
      }
      if (wants(config_.output, OutputKind::Fo)) (*json)["fo"] = to_json(fo);
      if (wants(config_.output, OutputKind::Trace)) {
        Json traces = Json::array();
        for (const auto& t : result.traces()) traces.push_back(to_json(t));
        (*json)["trace"] = std::move(traces);
      }
      if (report) (*json)["verify"] = to_json(*report);
      return code;
    }

    const bool all = config_.output == OutputKind::All;
    const char* indent = all ? "  " : "";
    if (wants(config_.output, OutputKind::Quasi)) {
      if (all) out_ << "quasi:\n";
      for (const auto& qq : result.quasis) out_ << indent << to_string(qq) << '\n';
    }
    if (wants(config_.output, OutputKind::Fo)) {
      if (all) out_ << "fo:\n";
      out_ << indent << to_string(fo) << '\n';
    }
    if (wants(config_.output, OutputKind::Trace)) {
      if (all) out_ << "trace:\n";
      print_trace(result, indent);
    }
    if (report) out_ << describe(*report) << '\n';
    return code;
  }

  int failure(const AlbaResult& result, const std::string& text, Json* json) {
    const auto& stuck = result.failure->stuck;
    if (json) {
      *json = Json{{"input", text},
                   {"status", "failure"},
                   {"message", result.failure_message()},
                   {"system", result.failure->system},
                   {"variable", stuck.variable},
                   {"inequality", stuck.inequality ? Json(to_string(*stuck.inequality))
                                                   : Json(nullptr)}};
      if (!result.classification.inductive()) {
        (*json)["classification"] = to_json(result.classification);
      }
      if (wants(config_.output, OutputKind::Trace)) {
        Json traces = Json::array();
        for (const auto& t : result.traces()) traces.push_back(to_json(t));
        (*json)["trace"] = std::move(traces);
      }
      return kFailure;
    }
    out_ << "failure: " << result.failure_message() << '\n';
    if (!result.classification.inductive()) {
      err_ << "note: input is not inductive: " << result.classification.error->message << '\n';
    }
    if (wants(config_.output, OutputKind::Trace)) print_trace(result, "");
    return kFailure;
  }

  void print_trace(const AlbaResult& result, const char* indent) {
    for (std::size_t k = 0; k < result.runs.size(); ++k) {
      const SystemRun& r = result.runs[k];
      out_ << indent << "system " << k << ": " << to_string(r.residual) << '\n';
      out_ << indent << "  start: " << join(r.initial.inequalities, ", ") << '\n';
      for (const auto& step : r.reduced.trace) {
        out_ << indent << "  " << to_string(step.rule);
        if (step.subst) out_ << " [" << step.subst->var << " := " << to_string(step.subst->formula) << "]";
        out_ << ": " << join(step.consumed, ", ") << " => "
             << (step.produced.empty() ? "(nothing)" : join(step.produced, ", ")) << '\n';
      }
      out_ << indent << "  result: " << join(r.reduced.inequalities, ", ");
      if (r.reduced.stuck) out_ << " (stuck on " << r.reduced.stuck->variable << ")";
      out_ << '\n';
    }
  }

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
};

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

std::string describe(const CorrespondenceReport& report) {
  if (report.agree()) {
    return "verified on all frames n<=" + std::to_string(report.max_n) + " (" +
           std::to_string(report.frames_checked) + " frames)";
  }
  const auto& cx = *report.counterexample;
  return "counterexample: " + to_string(cx.frame) + " (modal valid: " +
         (cx.modal_valid ? "yes" : "no") + ", first-order true: " + (cx.fo_true ? "yes" : "no") +
         ")";
}

int exit_code_for(const CorrespondenceReport& report) {
  return report.agree() ? kOk : kCounterexample;
}

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inequality.has_value() == config.file.has_value()) {
    err << "error: give exactly one of an inequality or --file\n";
    return kUsage;
  }
  if (config.verify && *config.verify < 1) {
    err << "error: --verify needs a bound of at least 1\n";
    return kUsage;
  }
  if (config.verify && *config.verify > 4) {
    err << "error: --verify is limited to frames of at most 4 worlds\n";
    return kUsage;
  }
  const bool json = config.format == Format::Json;
  Session session(config, out, err);

  if (config.inequality) {
    Json doc;
    const int code = session.process(*config.inequality, "", json ? &doc : nullptr);
    if (json) out << doc.dump(2) << '\n';
    return code;
  }

  std::ifstream in(*config.file);
  if (!in) {
    err << "error: cannot read " << *config.file << '\n';
    return kUsage;
  }
  int code = kOk;
  Json docs = Json::array();
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (skippable(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string label = "line " + std::to_string(lineno) + ": ";
    if (json) {
      Json doc;
      code = std::max(code, session.process(line, label, &doc));
      docs.push_back(std::move(doc));
    } else {
      out << "== " << line << '\n';
      code = std::max(code, session.process(line, label, nullptr));
    }
  }
  if (json) out << docs.dump(2) << '\n';
  return code;
}

}  // namespace alba::cli
