#include "lpterm/analyzer.hpp"

#include <algorithm>
#include <bit>

#include "lpterm/loopcheck.hpp"

namespace lpterm {

namespace {

Verdict verdict_of(const TreeResult& r) {
  if (r.abort) {
    return r.abort->exact ? Verdict::NonTerminating
                          : Verdict::MostLikelyNonTerminating;
  }
  return r.flag ? Verdict::MostLikelyTerminating : Verdict::Terminating;
}

std::uint64_t mask_of(const ModePattern& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.input.size(); ++i) {
    if (m.input[i]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

AnalysisReport analyze(const Program& p, const Query& q, const Config& cfg) {
  cfg.validate();
  q.validate();
  AnalysisReport report;
  report.query = q;
  const auto start = std::chrono::steady_clock::now();
  if (!p.defines(q.atom.key())) {
    report.diagnostics.push_back("predicate " + q.atom.predicate + "/" +
                                 std::to_string(q.atom.arity()) +
                                 " has no clauses");
  }
  LoopCheckPolicy policy(p, cfg);
  try {
    TreeResult result = construct(p, q, cfg, policy);
    report.verdict = verdict_of(result);
    report.stats = result.stats;
    report.flag = result.flag;
    report.abort = result.abort;
    if (cfg.keep_tree) {
      report.tree = std::make_shared<const TreeResult>(std::move(result));
    }
  } catch (const EngineError& e) {
    report.error = e.kind();
    report.error_message = e.what();
    report.floundered = e.kind() == EngineError::Kind::Floundering;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

Query moded_query(const PredicateKey& key, std::uint64_t mask) {
  Query q;
  q.atom.predicate = key.name;
  q.pattern.input.resize(key.arity);
  const bool single = std::popcount(mask) == 1;
  for (std::size_t i = 0; i < key.arity; ++i) {
    const bool input = (mask >> i) & 1;
    q.pattern.input[i] = input;
    std::string name = input ? (single ? "I" : "I" + std::to_string(i + 1))
                             : "V" + std::to_string(i + 1);
    q.atom.args.push_back(Term::variable(VarId{i + 1}, std::move(name)));
  }
  return q;
}

std::vector<Query> enumerate_moded_queries(const Program& p) {
  std::vector<Query> out;
  for (const PredicateKey& key : p.predicates()) {
    if (key.arity == 0 || key.arity >= 64) continue;
    const std::uint64_t limit = std::uint64_t{1} << key.arity;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      out.push_back(moded_query(key, mask));
    }
  }
  return out;
}

std::vector<Query> enumerate_concrete_queries(const Program& p) {
  std::vector<Query> out;
  for (const PredicateKey& key : p.predicates()) {
    Query q;
    q.atom.predicate = key.name;
    q.pattern.input.assign(key.arity, false);
    for (std::size_t i = 0; i < key.arity; ++i) {
      q.atom.args.push_back(
          Term::variable(VarId{i + 1}, "X" + std::to_string(i + 1)));
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<AnalysisReport> analyze_all(const Program& p, const Config& cfg,
                                        bool prune) {
  cfg.validate();
  const bool pruning = prune && (cfg.algorithm == 1 || cfg.prune_any_algorithm);
  std::vector<AnalysisReport> out;
  for (const Query& q : enumerate_moded_queries(p)) {
    std::optional<Verdict> inherited;
    if (pruning) {
      const std::uint64_t mask = mask_of(q.pattern);
      for (const AnalysisReport& r : out) {
        if (!r.verdict || !is_terminating_side(*r.verdict)) continue;
        if (r.query.atom.key() != q.atom.key()) continue;
        const std::uint64_t sub = mask_of(r.query.pattern);
        if ((sub & mask) != sub || sub == mask) continue;
        inherited = std::max(inherited.value_or(*r.verdict), *r.verdict);
      }
    }
    if (inherited) {
      AnalysisReport r;
      r.query = q;
      r.verdict = inherited;
      r.inherited = true;
      out.push_back(std::move(r));
    } else {
      out.push_back(analyze(p, q, cfg));
    }
  }
  for (const Query& q : enumerate_concrete_queries(p)) {
    out.push_back(analyze(p, q, cfg));
  }
  return out;
}

}  // namespace lpterm
