#include "lpterm/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpterm {

std::vector<Term> herbrand_terms(const Program& p, std::size_t depth) {
  std::vector<std::vector<Term>> levels;
  std::vector<Term> base;
  for (const std::string& c : p.constants()) base.push_back(Term::constant(c));
  levels.push_back(std::move(base));

  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Term> below;
    for (const auto& level : levels) below.insert(below.end(), level.begin(), level.end());
    const std::size_t fresh_from = below.size() - levels.back().size();
    std::vector<Term> level;
    for (const PredicateKey& f : p.functions()) {
      // Odometer over argument tuples; keep those with some argument at d-1.
      std::vector<std::size_t> idx(f.arity, 0);
      if (below.empty()) break;
      while (true) {
        bool reaches = false;
        std::vector<Term> args;
        args.reserve(f.arity);
        for (std::size_t i : idx) {
          args.push_back(below[i]);
          reaches = reaches || i >= fresh_from;
        }
        if (reaches) level.push_back(Term::compound(f.name, std::move(args)));
        std::size_t k = 0;
        while (k < f.arity && ++idx[k] == below.size()) idx[k++] = 0;
        if (k == f.arity) break;
      }
    }
    levels.push_back(std::move(level));
  }

  std::vector<Term> out;
  for (auto& level : levels) {
    std::vector<std::pair<std::string, Term>> keyed;
    for (Term& t : level) keyed.emplace_back(to_string(t), std::move(t));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [_, t] : keyed) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Query> ground_instances(const Query& q,
                                    const std::vector<Term>& terms) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < q.pattern.input.size(); ++i) {
    if (q.pattern.input[i]) positions.push_back(i);
  }
  Query concrete = q;
  concrete.pattern.input.assign(q.atom.arity(), false);
  if (positions.empty()) return {concrete};
  if (terms.empty()) return {};

  std::vector<Query> out;
  std::vector<std::size_t> idx(positions.size(), 0);
  while (true) {
    Query inst = concrete;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      inst.atom.args[positions[k]] = terms[idx[k]];
    }
    out.push_back(std::move(inst));
    // Last position varies fastest.
    std::size_t k = positions.size();
    while (k > 0 && ++idx[k - 1] == terms.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

namespace {

VarId max_var_in(const Atom& a) {
  std::vector<VarId> vars;
  collect_variables(a, vars);
  VarId best{};
  for (VarId v : vars) best = std::max(best, v);
  return best;
}

class Searcher {
 public:
  Searcher(const Program& p, const Query& q, const SearchOptions& opts)
      : program_(p),
        opts_(opts),
        fresh_(VarId{std::max(p.max_var_id(), max_var_in(q.atom)).value + 1}) {}

  SearchResult run(const Query& q) {
    std::vector<Literal> goal{Literal{false, q.atom}};
    explore(goal, 0, false);
    return result_;
  }

 private:
  /// Returns true iff a success leaf was reached below `goal`.
  bool explore(const std::vector<Literal>& goal, std::size_t len,
               bool stop_at_success) {
    if (result_.reached_cap && opts_.stop_at_cap) return false;
    if (++visited_ > opts_.node_budget) {
      result_.exhausted = true;
      return false;
    }
    result_.longest = std::max(result_.longest, len);
    if (goal.empty()) {
      leaf();
      return true;
    }
    if (len >= opts_.max_len) {
      result_.reached_cap = true;
      leaf();
      return false;
    }
    const Literal& sel = goal.front();
    if (sel.negative) {
      if (!sel.atom.args.empty()) {
        std::vector<VarId> vars;
        collect_variables(sel.atom, vars);
        if (!vars.empty()) {
          throw EngineError(EngineError::Kind::Floundering,
                            "floundering: " + to_string(sel));
        }
      }
      trail_.push_back({EdgeKind::NegationArc, 0});
      const bool refuted =
          explore({Literal{false, sel.atom}}, len, true);
      trail_.pop_back();
      if (refuted) {
        leaf();
        return false;
      }
      trail_.push_back({EdgeKind::NegationSucceeded, 0});
      std::vector<Literal> rest(goal.begin() + 1, goal.end());
      const bool found = explore(rest, len, stop_at_success);
      trail_.pop_back();
      return found;
    }

    bool found = false;
    bool applied = false;
    static const InputVarSet kNone;
    for (std::size_t c : program_.clauses_for(sel.atom.key())) {
      Clause renamed = fresh_.rename(program_.clause(c));
      auto u = mgu(sel.atom, renamed.head, kNone, opts_.occurs_check);
      if (!u) continue;
      applied = true;
      std::vector<Literal> next;
      next.reserve(renamed.body.size() + goal.size() - 1);
      for (const Literal& l : renamed.body) next.push_back(apply(u->subst, l));
      for (std::size_t i = 1; i < goal.size(); ++i) {
        next.push_back(apply(u->subst, goal[i]));
      }
      trail_.push_back({EdgeKind::Resolution, c});
      const bool below = explore(next, len + 1, stop_at_success);
      trail_.pop_back();
      found = found || below;
      if ((found && stop_at_success) || result_.exhausted) break;
      if (result_.reached_cap && opts_.stop_at_cap) break;
    }
    if (!applied) leaf();
    return found;
  }

  void leaf() {
    if (opts_.on_leaf) opts_.on_leaf(trail_);
  }

  const Program& program_;
  const SearchOptions& opts_;
  FreshVariables fresh_;
  SearchResult result_;
  std::vector<DerivationStep> trail_;
  std::size_t visited_ = 0;
};

}  // namespace

SearchResult bounded_search(const Program& p, const Query& q,
                            const SearchOptions& opts) {
  if (q.pattern.is_moded()) {
    throw std::invalid_argument("bounded_search needs a concrete query");
  }
  return Searcher(p, q, opts).run(q);
}

SearchResult bounded_search(const Program& p, const Query& q, std::size_t max_len) {
  SearchOptions opts;
  opts.max_len = max_len;
  return bounded_search(p, q, opts);
}

BoundedForestSummary forest_probe(const Program& p, const Query& q,
                                  std::size_t depth, std::size_t max_len) {
  SearchOptions opts;
  opts.max_len = max_len;
  return forest_probe(p, q, depth, opts);
}

BoundedForestSummary forest_probe(const Program& p, const Query& q,
                                  std::size_t depth, const SearchOptions& opts) {
  BoundedForestSummary out;
  const std::vector<Term> terms =
      q.pattern.is_moded() ? herbrand_terms(p, depth) : std::vector<Term>{};
  for (const Query& inst : ground_instances(q, terms)) {
    ++out.instances;
    try {
      SearchResult r = bounded_search(p, inst, opts);
      out.longest.push_back(r.longest);
      if (r.reached_cap) out.reached_cap = true;
      if (r.reached_cap || r.exhausted) out.all_finite = false;
      if (r.exhausted) out.errors.push_back(to_string(inst) + ": node budget exhausted");
    } catch (const EngineError& e) {
      out.longest.push_back(0);
      out.all_finite = false;
      out.errors.push_back(to_string(inst) + ": " + e.what());
    }
  }
  return out;
}

Derivation derivation_to(const TreeResult& tree, NodeId node) {
  std::vector<NodeId> chain;
  for (std::optional<NodeId> at = node; at; at = tree.nodes.at(*at).parent) {
    chain.push_back(*at);
  }
  std::reverse(chain.begin(), chain.end());
  Derivation d;
  const Node& root = tree.nodes.at(chain.front());
  d.root = root.selected().atom;
  if (root.inputs) d.inputs = *root.inputs;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Edge& e = tree.nodes.at(chain[i]).edge;
    d.steps.push_back({e.kind, e.clause});
  }
  return d;
}

InstantiatedDerivation instantiate_derivation(
    const Program& p, const Derivation& d,
    const std::map<VarId, Term>& assignment, bool occurs_check) {
  std::vector<Binding> bindings;
  for (VarId v : d.inputs) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw std::invalid_argument("input variable without an assignment");
    }
    if (!it->second.ground()) {
      throw std::invalid_argument("assignment must map to ground terms");
    }
    bindings.push_back({v, it->second});
  }
  const Substitution ground(std::move(bindings));
  InstantiatedDerivation out;
  out.root = apply(ground, d.root);
  std::vector<Literal> goal{Literal{false, out.root}};
  out.goals.push_back(goal);

  FreshVariables fresh(
      VarId{std::max(p.max_var_id(), max_var_in(d.root)).value + 1});
  static const InputVarSet kNone;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DerivationStep& step = d.steps[i];
    std::optional<std::vector<Literal>> next;
    if (!goal.empty()) {
      const Literal& sel = goal.front();
      switch (step.kind) {
        case EdgeKind::Resolution: {
          if (sel.negative || sel.atom.key() != p.clause(step.clause).head.key()) {
            break;
          }
          Clause renamed = fresh.rename(p.clause(step.clause));
          auto u = mgu(sel.atom, renamed.head, kNone, occurs_check);
          if (!u) break;
          std::vector<Literal> g;
          for (const Literal& l : renamed.body) g.push_back(apply(u->subst, l));
          for (std::size_t k = 1; k < goal.size(); ++k) {
            g.push_back(apply(u->subst, goal[k]));
          }
          next = std::move(g);
          break;
        }
        case EdgeKind::NegationArc:
          if (sel.negative) next = std::vector<Literal>{Literal{false, sel.atom}};
          break;
        case EdgeKind::NegationSucceeded:
          if (sel.negative) next = std::vector<Literal>(goal.begin() + 1, goal.end());
          break;
        case EdgeKind::Root:
          break;
      }
    }
    if (!next) {
      out.mismatch = i;
      break;
    }
    goal = std::move(*next);
    out.steps.push_back(step);
    out.goals.push_back(goal);
  }
  return out;
}

}  // namespace lpterm
