#ifndef LPTERM_UNIFY_HPP
#define LPTERM_UNIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "lpterm/term.hpp"

namespace lpterm {

struct Binding {
  VarId var;
  Term value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// Ordered list of bindings. Bindings produced by `mgu` are idempotent: no
/// bound variable occurs in any right-hand side.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::vector<Binding> bindings);

  const std::vector<Binding>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  const Term* lookup(VarId v) const;

 private:
  std::vector<Binding> bindings_;
  std::map<VarId, std::size_t> index_;
};

/// Variables currently designated as input variables. Grows along a
/// derivation and never shrinks.
using InputVarSet = std::set<VarId>;

/// Simultaneous application.
Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);
Literal apply(const Substitution& s, const Literal& l);
std::vector<Literal> apply(const Substitution& s, std::span<const Literal> goal);

struct Unifier {
  Substitution subst;
  /// Input set after propagation through the bindings.
  InputVarSet inputs;
};

/// Most general unifier of a goal atom and a (renamed-apart) clause head.
///
/// Variable/variable ties: a goal variable always survives over a head
/// variable (head variables carry larger ids than anything in the goal); an
/// input variable survives over a non-input one; otherwise the smaller id
/// survives. For every binding `I -> t` with `I` an input variable, the
/// variables of `t` become input variables.
///
/// Without the occurs check a cyclic binding is kept unresolved (applied once)
/// since finite terms cannot represent it.
std::optional<Unifier> mgu(const Atom& goal_atom, const Atom& head_atom,
                           const InputVarSet& inputs, bool occurs_check = true);

}  // namespace lpterm

#endif  // LPTERM_UNIFY_HPP
