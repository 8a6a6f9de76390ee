#ifndef LPTERM_CONFIG_HPP
#define LPTERM_CONFIG_HPP

#include <cstddef>
#include <optional>

namespace lpterm {

/// How condition (c) of the loop check decides that an argument "grows".
enum class GrowthMode {
  /// term size strictly increases across every consecutive loop-goal pair
  Strict,
  /// term size strictly increases across at least one pair and never shrinks
  Some,
};

struct Config {
  /// Number of same-clause loop goals required before a cut (>= 3).
  std::size_t repetition = 3;
  /// 1 = plain algorithm, 2 = with both optimization strategies.
  int algorithm = 2;
  bool heuristic1 = true;
  bool occurs_check = true;
  std::size_t max_nodes = 100000;
  /// Substitution-chain length that marks an input variable as consumed.
  /// Defaults to repetition - 1.
  std::optional<std::size_t> cprime_steps;
  GrowthMode growth = GrowthMode::Strict;
  /// Keep the generated tree in the report (needed for traces and replay).
  bool keep_tree = false;
  /// Allow subset pruning of query sets under algorithm 2 as well.
  bool prune_any_algorithm = false;

  std::size_t chain_threshold() const {
    return cprime_steps.value_or(repetition - 1);
  }
  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

}  // namespace lpterm

#endif  // LPTERM_CONFIG_HPP
