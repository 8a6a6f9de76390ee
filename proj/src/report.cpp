#include "lpterm/report.hpp"

namespace lpterm {

namespace {

std::string_view error_token(EngineError::Kind k) {
  return k == EngineError::Kind::Floundering ? "FLOUNDERING" : "RESOURCE_EXCEEDED";
}

}  // namespace

std::string tsv_line(const AnalysisReport& r) {
  std::string out = to_string(r.query);
  out += '\t';
  if (r.verdict) {
    out += verdict_token(*r.verdict);
  } else if (r.error) {
    out += error_token(*r.error);
  }
  out += '\t' + std::to_string(r.stats.nodes);
  out += '\t' + std::to_string(r.stats.cuts);
  return out;
}

nlohmann::json to_json(const AnalysisReport& r, const Program& p) {
  using nlohmann::json;
  json j;
  j["query"] = to_string(r.query);
  j["predicate"] = r.query.atom.predicate;
  j["arity"] = r.query.atom.arity();
  j["inputs"] = r.query.pattern.input;
  j["verdict"] = r.verdict ? json(verdict_token(*r.verdict)) : json(nullptr);
  j["statistics"] = {
      {"nodes", r.stats.nodes},
      {"cuts", r.stats.cuts},
      {"flagged_cuts", r.stats.flagged_cuts},
      {"windows", r.stats.windows},
      {"negation_arcs", r.stats.negation_arcs},
      {"success_leaves", r.stats.success_leaves},
      {"floundered", r.floundered},
  };
  j["approximate"] = r.flag;
  if (r.abort) {
    j["abort"] = {
        {"window", r.abort->window.nodes},
        {"clause", p.clauses().empty() ? std::string()
                                       : p.clause_label(r.abort->window.clause)},
        {"exact", r.abort->exact},
    };
  } else {
    j["abort"] = nullptr;
  }
  if (r.error) {
    j["error"] = {{"kind", error_token(*r.error)}, {"message", r.error_message}};
  } else {
    j["error"] = nullptr;
  }
  j["diagnostics"] = r.diagnostics;
  j["inherited"] = r.inherited;
  j["elapsed_us"] = r.elapsed.count();
  return j;
}

nlohmann::json to_json(const std::vector<AnalysisReport>& rs, const Program& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AnalysisReport& r : rs) arr.push_back(to_json(r, p));
  return arr;
}

}  // namespace lpterm
