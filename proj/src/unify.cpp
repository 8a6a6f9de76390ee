#include "lpterm/unify.hpp"

#include <utility>

namespace lpterm {

Substitution::Substitution(std::vector<Binding> bindings)
    : bindings_(std::move(bindings)) {
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    index_.emplace(bindings_[i].var, i);
  }
}

const Term* Substitution::lookup(VarId v) const {
  auto it = index_.find(v);
  return it == index_.end() ? nullptr : &bindings_[it->second].value;
}

Term apply(const Substitution& s, const Term& t) {
  if (t.ground() || s.empty()) return t;
  if (t.is_variable()) {
    const Term* bound = s.lookup(t.var_id());
    return bound ? *bound : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(s, a));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Term::compound(t.name(), std::move(args)) : t;
}

Atom apply(const Substitution& s, const Atom& a) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(s, t));
  return out;
}

Literal apply(const Substitution& s, const Literal& l) {
  return {l.negative, apply(s, l.atom)};
}

std::vector<Literal> apply(const Substitution& s, std::span<const Literal> goal) {
  std::vector<Literal> out;
  out.reserve(goal.size());
  for (const Literal& l : goal) out.push_back(apply(s, l));
  return out;
}

namespace {

class Solver {
 public:
  Solver(const InputVarSet& inputs, bool occurs_check)
      : inputs_(inputs), occurs_check_(occurs_check) {}

  bool unify(const Term& x, const Term& y) {
    Term a = deref(x);
    Term b = deref(y);
    if (a.is_variable() && b.is_variable()) {
      if (a.var_id() == b.var_id()) return true;
      bind_pair(a, b);
      return true;
    }
    if (a.is_variable()) return bind(a.var_id(), b);
    if (b.is_variable()) return bind(b.var_id(), a);
    if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) {
      return false;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!unify(a.args()[i], b.args()[i])) return false;
    }
    return true;
  }

  /// Solved, idempotent form in binding order.
  std::vector<Binding> solved() {
    std::vector<Binding> out;
    out.reserve(order_.size());
    for (VarId v : order_) out.push_back({v, resolve_var(v)});
    return out;
  }

 private:
  Term deref(Term t) const {
    while (t.is_variable()) {
      auto it = theta_.find(t.var_id());
      if (it == theta_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(VarId v, const Term& t) const {
    if (t.ground()) return false;
    Term d = deref(t);
    if (d.is_variable()) return d.var_id() == v;
    for (const Term& a : d.args()) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  bool bind(VarId v, const Term& t) {
    if (occurs_check_ && occurs(v, t)) return false;
    theta_.emplace(v, t);
    order_.push_back(v);
    return true;
  }

  void bind_pair(const Term& x, const Term& y) {
    const bool x_in = inputs_.count(x.var_id()) != 0;
    const bool y_in = inputs_.count(y.var_id()) != 0;
    const bool x_survives = x_in != y_in ? x_in : x.var_id() < y.var_id();
    if (x_survives) {
      bind(y.var_id(), x);
    } else {
      bind(x.var_id(), y);
    }
  }

  Term resolve_var(VarId v) {
    if (auto it = resolved_.find(v); it != resolved_.end()) return it->second;
    visiting_.insert(v);
    Term r = resolve(theta_.at(v));
    visiting_.erase(v);
    resolved_.emplace(v, r);
    return r;
  }

  Term resolve(const Term& t) {
    if (t.ground()) return t;
    if (t.is_variable()) {
      if (!theta_.count(t.var_id()) || visiting_.count(t.var_id())) return t;
      return resolve_var(t.var_id());
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const Term& a : t.args()) {
      args.push_back(resolve(a));
      changed = changed || !args.back().same_node(a);
    }
    return changed ? Term::compound(t.name(), std::move(args)) : t;
  }

 private:
  const InputVarSet& inputs_;
  bool occurs_check_;
  std::map<VarId, Term> theta_;
  std::vector<VarId> order_;
  std::map<VarId, Term> resolved_;
  std::set<VarId> visiting_;
};

}  // namespace

std::optional<Unifier> mgu(const Atom& goal_atom, const Atom& head_atom,
                           const InputVarSet& inputs, bool occurs_check) {
  if (goal_atom.key() != head_atom.key()) return std::nullopt;
  Solver solver(inputs, occurs_check);
  for (std::size_t i = 0; i < goal_atom.args.size(); ++i) {
    if (!solver.unify(goal_atom.args[i], head_atom.args[i])) return std::nullopt;
  }
  Unifier result{Substitution(solver.solved()), inputs};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Binding& b : result.subst.bindings()) {
      if (!result.inputs.count(b.var) || b.value.ground()) continue;
      std::vector<VarId> vars;
      collect_variables(b.value, vars);
      for (VarId v : vars) grew = result.inputs.insert(v).second || grew;
    }
  }
  return result;
}

}  // namespace lpterm
