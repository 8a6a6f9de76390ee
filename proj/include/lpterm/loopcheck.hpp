#ifndef LPTERM_LOOPCHECK_HPP
#define LPTERM_LOOPCHECK_HPP

#include <optional>

#include "lpterm/config.hpp"
#include "lpterm/engine.hpp"
#include "lpterm/program.hpp"

namespace lpterm {

/// Searches the ancestor chain of the selected atom at `node` for `r - 1`
/// earlier loop goals at which `clause` was applied, each a loop goal of the
/// previous one. Returns the most recent such window (nearest ancestors
/// preferred), or nullopt.
std::optional<Window> detect_window(const TreeView& view, NodeId node,
                                    std::size_t clause, std::size_t r);

/// Condition (c): every argument position whose size grows across the
/// window has reached the maximum head nesting depth of its predicate at the
/// last loop goal. Vacuously true when nothing grows.
bool heuristic1_holds(const Window& w, const TreeView& view,
                      const PmaxTable& pmax,
                      GrowthMode growth = GrowthMode::Strict);

/// Longest substitution chain rooted at `input` over the log entries applied
/// at path positions [from, to). Variable-to-variable bindings are followed
/// without counting; each binding to a non-ground compound counts one step.
std::size_t substitution_chain_length(const TreeView& view, VarId input,
                                      std::size_t from, std::size_t to);

/// Condition (c'): no input variable of the goal at g_1 is recursively
/// substituted through functions (a chain of at least `steps` steps) between
/// g_1 and g_r.
bool cprime_holds(const Window& w, const TreeView& view, std::size_t steps);

/// Common precondition of the two optimization strategies: no negation on
/// the prefix, consecutive selected atoms are variants, and the clause
/// sequence between consecutive loop goals is the same for every pair.
bool strategy_preamble(const Window& w, const TreeView& view);

/// Every goal g_1..g_r consists of a single literal.
bool single_subgoal_window(const Window& w, const TreeView& view);

/// The cut decision of the termination algorithms for one window.
CutDecision decide(const std::optional<Window>& w, const Config& cfg,
                   const TreeView& view, const PmaxTable& pmax);

/// The loop check (with condition (c) and (c')) packaged as a cut policy.
class LoopCheckPolicy final : public CutPolicy {
 public:
  LoopCheckPolicy(const Program& p, const Config& cfg)
      : cfg_(cfg), pmax_(pmax_table(p)) {}

  CutDecision consult(const TreeView& view, NodeId node,
                      std::size_t clause) override;

  const PmaxTable& pmax() const { return pmax_; }

 private:
  const Config& cfg_;
  PmaxTable pmax_;
};

}  // namespace lpterm

#endif  // LPTERM_LOOPCHECK_HPP
