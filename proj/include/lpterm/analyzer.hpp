#ifndef LPTERM_ANALYZER_HPP
#define LPTERM_ANALYZER_HPP

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpterm/config.hpp"
#include "lpterm/engine.hpp"
#include "lpterm/program.hpp"

namespace lpterm {

struct AnalysisReport {
  Query query;
  /// Absent when the analysis stopped on an error.
  std::optional<Verdict> verdict;
  TreeStats stats;
  bool flag = false;
  std::optional<AbortInfo> abort;
  bool floundered = false;
  std::optional<EngineError::Kind> error;
  std::string error_message;
  std::vector<std::string> diagnostics;
  /// The verdict was copied from a smaller mode pattern instead of computed.
  bool inherited = false;
  std::chrono::microseconds elapsed{0};
  /// Retained when Config::keep_tree is set.
  std::shared_ptr<const TreeResult> tree;
};

/// Runs Algorithm 1 or 2 (per cfg.algorithm) on one query.
AnalysisReport analyze(const Program& p, const Query& q, const Config& cfg);

/// Every most general moded query: for each predicate, each nonempty subset of
/// argument positions as inputs, in bitmask order (bit i = position i).
std::vector<Query> enumerate_moded_queries(const Program& p);

/// One all-variable query p(X1,...,Xn) per predicate.
std::vector<Query> enumerate_concrete_queries(const Program& p);

/// The query with this predicate and input positions set by `mask`.
Query moded_query(const PredicateKey& key, std::uint64_t mask);

/// Analyzes the moded queries followed by the concrete ones. With `prune`,
/// a moded query whose input set contains that of an analyzed query with a
/// terminating-side verdict inherits it (algorithm 1 only, unless
/// cfg.prune_any_algorithm).
std::vector<AnalysisReport> analyze_all(const Program& p, const Config& cfg,
                                        bool prune);

}  // namespace lpterm

#endif  // LPTERM_ANALYZER_HPP
