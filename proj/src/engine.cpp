#include "lpterm/engine.hpp"

#include <algorithm>

namespace lpterm {

AncestorList AncestorList::with(NodeId node, Atom atom) const {
  AncestorList out;
  out.head_ = std::make_shared<const Cell>(
      Cell{AncestorEntry{node, std::move(atom)}, head_, size() + 1});
  return out;
}

const AncestorEntry* AncestorList::find(NodeId node) const {
  for (const Cell* c = head_.get(); c != nullptr; c = c->next.get()) {
    if (c->entry.node == node) return &c->entry;
    if (c->entry.node < node) break;
  }
  return nullptr;
}

std::vector<NodeId> AncestorList::node_ids() const {
  std::vector<NodeId> out;
  out.reserve(size());
  for (const AncestorEntry& e : *this) out.push_back(e.node);
  return out;
}

std::optional<std::size_t> TreeView::position_of(NodeId id) const {
  auto it = std::lower_bound(path_.begin(), path_.end(), id);
  if (it == path_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - path_.begin());
}

const Edge& TreeView::edge_after(std::size_t pos) const {
  return nodes_.at(path_.at(pos + 1)).edge;
}

Term FreshVariables::make(const std::string& base) {
  VarId id{next_++};
  return Term::variable(id, base + "_" + std::to_string(id.value));
}

namespace {

class Renamer {
 public:
  explicit Renamer(FreshVariables& fresh) : fresh_(fresh) {}

  Term term(const Term& t) {
    if (t.ground()) return t;
    if (t.is_variable()) {
      auto it = map_.find(t.var_id());
      if (it != map_.end()) return it->second;
      Term v = fresh_.make(t.name());
      map_.emplace(t.var_id(), v);
      return v;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const Term& a : t.args()) args.push_back(term(a));
    return Term::compound(t.name(), std::move(args));
  }

  Atom atom(const Atom& a) {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(term(t));
    return out;
  }

 private:
  FreshVariables& fresh_;
  std::map<VarId, Term> map_;
};

}  // namespace

Clause FreshVariables::rename(const Clause& c) {
  Renamer r(*this);
  Clause out;
  out.index = c.index;
  out.head = r.atom(c.head);
  out.body.reserve(c.body.size());
  for (const Literal& l : c.body) out.body.push_back({l.negative, r.atom(l.atom)});
  return out;
}

std::pair<std::vector<Literal>, InputVarSet> initial_goal(const Query& q) {
  q.validate();
  std::vector<VarId> inputs = q.input_variables();
  return {{Literal{false, q.atom}}, InputVarSet(inputs.begin(), inputs.end())};
}

std::optional<Node> expand_step(const Node& n, const Clause& c,
                                FreshVariables& fresh, NodeId child_id,
                                bool occurs_check) {
  const Literal& sel = n.selected();
  if (sel.negative || sel.atom.key() != c.head.key()) return std::nullopt;
  // Cheap functor clash test before spending fresh variables.
  for (std::size_t i = 0; i < sel.atom.args.size(); ++i) {
    const Term& g = sel.atom.args[i];
    const Term& h = c.head.args[i];
    if (g.is_variable() || h.is_variable()) continue;
    if (g.kind() != h.kind() || g.name() != h.name() || g.arity() != h.arity()) {
      return std::nullopt;
    }
  }
  static const InputVarSet kNoInputs;
  const InputVarSet& inputs = n.inputs ? *n.inputs : kNoInputs;
  Clause renamed = fresh.rename(c);
  auto unifier = mgu(sel.atom, renamed.head, inputs, occurs_check);
  if (!unifier) return std::nullopt;

  Node child;
  child.id = child_id;
  child.parent = n.id;
  child.tree = n.tree;
  child.edge = Edge{EdgeKind::Resolution, c.index, unifier->subst.bindings()};
  child.goal.reserve(renamed.body.size() + n.goal.size() - 1);
  child.ancestors.reserve(child.goal.capacity());

  const AncestorList body_ancestors = n.ancestors.front().with(n.id, sel.atom);
  for (const Literal& l : renamed.body) {
    child.goal.push_back(apply(unifier->subst, l));
    child.ancestors.push_back(body_ancestors);
  }
  for (std::size_t i = 1; i < n.goal.size(); ++i) {
    child.goal.push_back(apply(unifier->subst, n.goal[i]));
    child.ancestors.push_back(n.ancestors[i]);
  }
  if (unifier->inputs.size() == inputs.size()) {
    child.inputs = n.inputs;
  } else {
    child.inputs = std::make_shared<const InputVarSet>(std::move(unifier->inputs));
  }
  return child;
}

namespace {

VarId max_var_in(const Query& q) {
  std::vector<VarId> vars;
  collect_variables(q.atom, vars);
  VarId best{};
  for (VarId v : vars) best = std::max(best, v);
  return best;
}

class Builder {
 public:
  Builder(const Program& p, const Query& q, const Config& cfg, CutPolicy& policy)
      : program_(p),
        cfg_(cfg),
        policy_(policy),
        fresh_(VarId{std::max(p.max_var_id(), max_var_in(q)).value + 1}),
        view_(p, cfg, result_.nodes, path_, result_.flag) {
    auto [goal, inputs] = initial_goal(q);
    Node root;
    root.goal = std::move(goal);
    root.ancestors.resize(1);
    root.inputs = std::make_shared<const InputVarSet>(std::move(inputs));
    add_node(std::move(root));
  }

  TreeResult run() {
    push(0);
    while (!frames_.empty()) {
      if (!step()) break;
    }
    result_.stats.nodes = result_.nodes.size();
    return std::move(result_);
  }

 private:
  enum class Phase { Start, AwaitSubsidiary, Done };

  struct Frame {
    NodeId node;
    std::size_t next_clause = 0;
    Phase phase = Phase::Start;
    std::size_t owned_tree = 0;
    std::size_t cuts_before = 0;
  };

  NodeId add_node(Node n) {
    if (result_.nodes.size() >= cfg_.max_nodes) {
      throw EngineError(EngineError::Kind::ResourceExceeded,
                        "node limit of " + std::to_string(cfg_.max_nodes) +
                            " exceeded");
    }
    n.id = result_.nodes.size();
    result_.nodes.push_back(std::move(n));
    return result_.nodes.back().id;
  }

  void push(NodeId id) {
    frames_.push_back(Frame{id});
    path_.push_back(id);
  }

  void pop() {
    frames_.pop_back();
    path_.pop_back();
  }

  void link_child(NodeId parent, NodeId child) {
    Node& p = result_.nodes[parent];
    p.children.push_back(child);
    p.status = NodeStatus::Internal;
  }

  /// Returns false when the construction must stop.
  bool step() {
    Frame& frame = frames_.back();
    const NodeId id = frame.node;
    if (result_.nodes[id].goal.empty()) {
      result_.nodes[id].status = NodeStatus::Success;
      ++result_.stats.success_leaves;
      const std::size_t tree = result_.nodes[id].tree;
      if (tree != 0) {
        stop_subsidiary(tree);
      } else {
        pop();
      }
      return true;
    }
    if (result_.nodes[id].selected().negative) return step_negative();
    return step_positive();
  }

  bool step_positive() {
    Frame& frame = frames_.back();
    const NodeId id = frame.node;
    const auto& candidates =
        program_.clauses_for(result_.nodes[id].selected().atom.key());
    if (frame.next_clause >= candidates.size()) {
      if (result_.nodes[id].children.empty()) {
        result_.nodes[id].status = NodeStatus::Failure;
      }
      pop();
      return true;
    }
    const std::size_t clause = candidates[frame.next_clause++];
    CutDecision decision = policy_.consult(view_, id, clause);
    if (decision.window) ++result_.stats.windows;
    switch (decision.kind) {
      case CutDecision::Kind::Allow:
        break;
      case CutDecision::Kind::Skip: {
        ++result_.stats.cuts;
        if (decision.set_flag) {
          ++result_.stats.flagged_cuts;
          result_.flag = true;
        }
        result_.nodes[id].cuts.push_back(
            {clause, decision.window.value_or(Window{}), decision.set_flag});
        return true;
      }
      case CutDecision::Kind::Abort: {
        Window w = decision.window.value_or(Window{});
        result_.nodes[id].cuts.push_back({clause, w, false});
        result_.abort = AbortInfo{std::move(w), decision.exact};
        return false;
      }
    }
    auto child = expand_step(result_.nodes[id], program_.clause(clause), fresh_,
                             result_.nodes.size(), cfg_.occurs_check);
    if (!child) return true;
    NodeId cid = add_node(std::move(*child));
    link_child(id, cid);
    push(cid);
    return true;
  }

  bool step_negative() {
    Frame& frame = frames_.back();
    const NodeId id = frame.node;
    switch (frame.phase) {
      case Phase::Start: {
        const Node& n = result_.nodes[id];
        std::vector<VarId> vars;
        collect_variables(n.selected().atom, vars);
        for (VarId v : vars) {
          if (!n.is_input(v)) {
            throw EngineError(EngineError::Kind::Floundering,
                              "floundering: selected negative literal " +
                                  to_string(n.selected()) +
                                  " contains a non-input variable");
          }
        }
        Node root;
        root.goal = {Literal{false, n.selected().atom}};
        root.ancestors = {n.ancestors.front()};
        root.parent = id;
        root.edge.kind = EdgeKind::NegationArc;
        root.tree = ++trees_;
        root.inputs = n.inputs;
        frame.phase = Phase::AwaitSubsidiary;
        frame.owned_tree = root.tree;
        frame.cuts_before = result_.stats.cuts;
        ++result_.stats.negation_arcs;
        NodeId rid = add_node(std::move(root));
        link_child(id, rid);
        result_.nodes[id].subsidiary = rid;
        push(rid);
        return true;
      }
      case Phase::AwaitSubsidiary: {
        // Exhausted without a success leaf: the negative literal succeeds.
        const bool approx = result_.stats.cuts > frame.cuts_before;
        frame.phase = Phase::Done;
        const Node& n = result_.nodes[id];
        Node child;
        child.parent = id;
        child.tree = n.tree;
        child.edge.kind = EdgeKind::NegationSucceeded;
        child.goal.assign(n.goal.begin() + 1, n.goal.end());
        child.ancestors.assign(n.ancestors.begin() + 1, n.ancestors.end());
        child.inputs = n.inputs;
        result_.nodes[id].negation =
            approx ? NegationOutcome::ApproxSucceeds : NegationOutcome::Succeeds;
        NodeId cid = add_node(std::move(child));
        link_child(id, cid);
        push(cid);
        return true;
      }
      case Phase::Done:
        pop();
        return true;
    }
    return true;
  }

  /// A success leaf was reached in subsidiary tree `tree`: abandon the rest
  /// of that tree and fail the negative literal that owns it.
  void stop_subsidiary(std::size_t tree) {
    pop();  // the success leaf
    while (!frames_.empty() && frames_.back().owned_tree != tree) {
      Frame& f = frames_.back();
      Node& n = result_.nodes[f.node];
      if (!n.goal.empty() && !n.selected().negative) {
        const auto& candidates = program_.clauses_for(n.selected().atom.key());
        for (std::size_t k = f.next_clause; k < candidates.size(); ++k) {
          n.pruned.push_back(candidates[k]);
        }
      }
      pop();
    }
    if (frames_.empty()) return;
    Node& owner = result_.nodes[frames_.back().node];
    owner.negation = NegationOutcome::Fails;
    owner.status = NodeStatus::Failure;
    pop();
  }

  const Program& program_;
  const Config& cfg_;
  CutPolicy& policy_;
  FreshVariables fresh_;
  TreeResult result_;
  std::vector<Frame> frames_;
  std::vector<NodeId> path_;
  std::size_t trees_ = 0;
  TreeView view_;
};

}  // namespace

TreeResult construct(const Program& p, const Query& q, const Config& cfg,
                     CutPolicy& policy) {
  cfg.validate();
  Builder builder(p, q, cfg, policy);
  return builder.run();
}

}  // namespace lpterm
