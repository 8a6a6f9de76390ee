#include "lpterm/loopcheck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lpterm/symbol_string.hpp"

namespace lpterm {

namespace {

class WindowSearch {
 public:
  WindowSearch(const TreeView& view, std::size_t clause)
      : view_(view), clause_(clause) {}

  /// Finds `remaining` further loop goals below `atom`, nearest first.
  bool extend(const Atom& atom, const AncestorList& ancestors,
              std::size_t remaining, std::vector<NodeId>& chain) {
    for (const AncestorEntry& entry : ancestors) {
      if (failed_.count({entry.node, remaining})) continue;
      auto pos = view_.position_of(entry.node);
      if (!pos || *pos + 1 >= view_.path().size()) continue;
      const Edge& edge = view_.edge_after(*pos);
      if (edge.kind != EdgeKind::Resolution || edge.clause != clause_) continue;
      if (!loops_into(entry.atom, atom)) continue;
      chain.push_back(entry.node);
      if (remaining == 1) return true;
      const Node& m = view_.node(entry.node);
      if (extend(m.selected().atom, m.ancestors.front(), remaining - 1, chain)) {
        return true;
      }
      chain.pop_back();
      failed_.insert({entry.node, remaining});
    }
    return false;
  }

 private:
  const TreeView& view_;
  std::size_t clause_;
  std::set<std::pair<NodeId, std::size_t>> failed_;
};

std::size_t path_position(const TreeView& view, NodeId id) {
  auto pos = view.position_of(id);
  return pos.value_or(0);
}

}  // namespace

std::optional<Window> detect_window(const TreeView& view, NodeId node,
                                    std::size_t clause, std::size_t r) {
  const Node& n = view.node(node);
  if (n.goal.empty() || n.selected().negative || r < 2) return std::nullopt;
  if (n.ancestors.front().size() < r - 1) return std::nullopt;
  WindowSearch search(view, clause);
  std::vector<NodeId> chain;
  if (!search.extend(n.selected().atom, n.ancestors.front(), r - 1, chain)) {
    return std::nullopt;
  }
  Window w;
  w.clause = clause;
  w.nodes.assign(chain.rbegin(), chain.rend());
  w.nodes.push_back(node);
  const std::size_t last = path_position(view, node);
  for (std::size_t p = 0; p < last; ++p) {
    EdgeKind k = view.edge_after(p).kind;
    if (k == EdgeKind::NegationArc || k == EdgeKind::NegationSucceeded) {
      w.negation_on_prefix = true;
      break;
    }
  }
  return w;
}

bool heuristic1_holds(const Window& w, const TreeView& view,
                      const PmaxTable& pmax, GrowthMode growth) {
  if (w.nodes.size() < 2) return true;
  const Atom& last = view.node(w.nodes.back()).selected().atom;
  auto row = pmax.find(last.key());
  for (std::size_t i = 0; i < last.arity(); ++i) {
    bool every = true;
    bool some = false;
    bool shrinks = false;
    for (std::size_t j = 0; j + 1 < w.nodes.size(); ++j) {
      std::size_t a = view.node(w.nodes[j]).selected().atom.args[i].size();
      std::size_t b = view.node(w.nodes[j + 1]).selected().atom.args[i].size();
      every = every && b > a;
      some = some || b > a;
      shrinks = shrinks || b < a;
    }
    const bool grows =
        growth == GrowthMode::Strict ? every : (some && !shrinks);
    if (!grows) continue;
    const std::size_t required =
        row == pmax.end() || i >= row->second.size() ? 0 : row->second[i];
    if (nesting_depth(last.args[i]) < required) return false;
  }
  return true;
}

std::size_t substitution_chain_length(const TreeView& view, VarId input,
                                      std::size_t from, std::size_t to) {
  std::map<VarId, const Term*> bound;
  for (std::size_t p = from; p < to; ++p) {
    for (const Binding& b : view.edge_after(p).bindings) {
      bound.emplace(b.var, &b.value);
    }
  }
  std::map<VarId, std::size_t> memo;
  std::set<VarId> visiting;
  auto longest = [&](auto&& self, VarId v) -> std::size_t {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    auto it = bound.find(v);
    if (it == bound.end() || visiting.count(v)) return 0;
    visiting.insert(v);
    const Term& t = *it->second;
    std::size_t best = 0;
    if (t.is_variable()) {
      best = self(self, t.var_id());
    } else if (t.is_compound() && !t.ground()) {
      std::vector<VarId> vars;
      collect_variables(t, vars);
      std::size_t below = 0;
      for (VarId u : vars) below = std::max(below, self(self, u));
      best = 1 + below;
    }
    visiting.erase(v);
    memo.emplace(v, best);
    return best;
  };
  return longest(longest, input);
}

bool cprime_holds(const Window& w, const TreeView& view, std::size_t steps) {
  if (w.nodes.empty()) return true;
  const Node& first = view.node(w.nodes.front());
  const std::size_t from = path_position(view, w.nodes.front());
  const std::size_t to = path_position(view, w.nodes.back());
  std::set<VarId> inputs;
  for (const Literal& l : first.goal) {
    std::vector<VarId> vars;
    collect_variables(l.atom, vars);
    for (VarId v : vars) {
      if (first.is_input(v)) inputs.insert(v);
    }
  }
  for (VarId v : inputs) {
    if (substitution_chain_length(view, v, from, to) >= steps) return false;
  }
  return true;
}

bool strategy_preamble(const Window& w, const TreeView& view) {
  if (w.negation_on_prefix || w.nodes.size() < 2) return false;
  std::vector<std::vector<std::size_t>> sequences;
  for (std::size_t j = 0; j + 1 < w.nodes.size(); ++j) {
    const Atom& a = view.node(w.nodes[j]).selected().atom;
    const Atom& b = view.node(w.nodes[j + 1]).selected().atom;
    if (!is_variant(a, b)) return false;
    std::vector<std::size_t> seq;
    const std::size_t from = path_position(view, w.nodes[j]);
    const std::size_t to = path_position(view, w.nodes[j + 1]);
    for (std::size_t p = from; p < to; ++p) {
      const Edge& e = view.edge_after(p);
      if (e.kind != EdgeKind::Resolution) return false;
      seq.push_back(e.clause);
    }
    if (!sequences.empty() && seq != sequences.back()) return false;
    sequences.push_back(std::move(seq));
  }
  return true;
}

bool single_subgoal_window(const Window& w, const TreeView& view) {
  return std::all_of(w.nodes.begin(), w.nodes.end(), [&](NodeId id) {
    return view.node(id).goal.size() == 1;
  });
}

CutDecision decide(const std::optional<Window>& w, const Config& cfg,
                   const TreeView& view, const PmaxTable& pmax) {
  if (!w) return CutDecision::allow();
  if (cfg.heuristic1 && !heuristic1_holds(*w, view, pmax, cfg.growth)) {
    return CutDecision::allow(w);
  }
  const bool strategies = cfg.algorithm == 2 && strategy_preamble(*w, view);
  if (cprime_holds(*w, view, cfg.chain_threshold())) {
    // Strategy 1 also needs that no earlier cut was approximate.
    return CutDecision::abort(*w, strategies && !view.flag());
  }
  // Strategy 2 exempts the skip from making the answer approximate.
  const bool exempt = strategies && single_subgoal_window(*w, view);
  return CutDecision::skip(*w, !exempt);
}

CutDecision LoopCheckPolicy::consult(const TreeView& view, NodeId node,
                                     std::size_t clause) {
  return decide(detect_window(view, node, clause, cfg_.repetition), cfg_, view,
                pmax_);
}

}  // namespace lpterm
