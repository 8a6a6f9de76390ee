#ifndef LPTERM_ORACLE_HPP
#define LPTERM_ORACLE_HPP

// Brute-force reference evaluation, used to cross-check the analyzer. None of
// this performs loop checking; everything is bounded instead.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpterm/engine.hpp"
#include "lpterm/program.hpp"

namespace lpterm {

/// Ground terms over the program's signature with nesting depth <= `depth`,
/// ordered by depth and then by printed form.
std::vector<Term> herbrand_terms(const Program& p, std::size_t depth);

/// Substitutes every combination of `terms` into the input positions of `q`.
/// The results are concrete queries (empty input sets).
std::vector<Query> ground_instances(const Query& q, const std::vector<Term>& terms);

/// One step of a derivation: a clause application, or a move across a
/// negation arc (into the subsidiary tree, or past a negative literal that
/// succeeded).
struct DerivationStep {
  EdgeKind kind = EdgeKind::Resolution;
  std::size_t clause = 0;
  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct SearchResult {
  std::size_t longest = 0;
  bool reached_cap = false;
  /// The node budget ran out before the tree was explored.
  bool exhausted = false;
};

struct SearchOptions {
  std::size_t max_len = 500;
  bool occurs_check = true;
  std::size_t node_budget = 2'000'000;
  /// Give up on the rest of the tree once some derivation reaches the cap.
  bool stop_at_cap = false;
  /// Called with the step sequence of every leaf (success, failure or cap).
  std::function<void(const std::vector<DerivationStep>&)> on_leaf;
};

/// Depth-first generalized SLDNF evaluation of a concrete query without loop
/// checking, abandoning derivations at `max_len` resolution steps. Subsidiary
/// trees stop at their first success. Throws EngineError on floundering.
SearchResult bounded_search(const Program& p, const Query& q,
                            const SearchOptions& opts);
SearchResult bounded_search(const Program& p, const Query& q, std::size_t max_len);

struct BoundedForestSummary {
  std::size_t instances = 0;
  std::vector<std::size_t> longest;
  bool reached_cap = false;
  bool all_finite = true;
  std::vector<std::string> errors;
};

/// bounded_search over every ground instance of `q` at Herbrand depth
/// `depth`. A concrete query is its own single instance.
BoundedForestSummary forest_probe(const Program& p, const Query& q,
                                  std::size_t depth, std::size_t max_len);
BoundedForestSummary forest_probe(const Program& p, const Query& q,
                                  std::size_t depth, const SearchOptions& opts);

/// A derivation recorded from a retained tree.
struct Derivation {
  Atom root;
  InputVarSet inputs;
  std::vector<DerivationStep> steps;
};

/// The derivation from the main root to `node`.
Derivation derivation_to(const TreeResult& tree, NodeId node);

struct InstantiatedDerivation {
  Atom root;
  /// Steps that still applied under the assignment.
  std::vector<DerivationStep> steps;
  /// Goal after each applied step, preceded by the root goal.
  std::vector<std::vector<Literal>> goals;
  /// Index of the first step that no longer applied, if any.
  std::optional<std::size_t> mismatch;
};

/// Replays `d` from its root with the input variables replaced by ground
/// terms, stopping at the first step that no longer applies. Throws
/// std::invalid_argument if an input variable is unassigned.
InstantiatedDerivation instantiate_derivation(
    const Program& p, const Derivation& d,
    const std::map<VarId, Term>& assignment, bool occurs_check = true);

}  // namespace lpterm

#endif  // LPTERM_ORACLE_HPP
