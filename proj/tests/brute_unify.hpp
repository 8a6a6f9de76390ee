#ifndef LPTERM_TESTS_BRUTE_UNIFY_HPP
#define LPTERM_TESTS_BRUTE_UNIFY_HPP

// Random atom pairs and an exhaustive unifier search over a small ground
// domain, for checking mgu against something that shares no code with it.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lpterm/unify.hpp"

namespace lpterm::testing {

class AtomPairGenerator {
 public:
  explicit AtomPairGenerator(std::uint32_t seed) : rng_(seed) {
    for (std::uint64_t i = 0; i < 3; ++i) {
      vars_.push_back(Term::variable(VarId{i + 1}, std::string(1, char('X' + i))));
    }
  }

  std::pair<Atom, Atom> next() {
    const std::size_t arity = std::uniform_int_distribution<std::size_t>(1, 3)(rng_);
    Atom a{"p", {}}, b{"p", {}};
    for (std::size_t i = 0; i < arity; ++i) {
      a.args.push_back(term(3));
      b.args.push_back(term(3));
    }
    return {a, b};
  }

 private:
  Term term(int depth) {
    int kind = std::uniform_int_distribution<int>(0, depth > 0 ? 5 : 2)(rng_);
    switch (kind) {
      case 0:
      case 1:
        return vars_[std::uniform_int_distribution<std::size_t>(0, 2)(rng_)];
      case 2:
        return Term::constant(std::bernoulli_distribution(0.5)(rng_) ? "a" : "b");
      case 3:
      case 4:
        return Term::compound("f", {term(depth - 1)});
      default:
        return Term::compound("g", {term(depth - 1), term(depth - 1)});
    }
  }

  std::mt19937 rng_;
  std::vector<Term> vars_;
};

/// Ground terms that assignments are drawn from.
inline std::vector<Term> brute_domain() {
  std::vector<Term> out;
  for (const char* c : {"a", "b"}) {
    Term t = Term::constant(c);
    out.push_back(t);
    for (int k = 0; k < 4; ++k) {
      t = Term::compound("f", {t});
      out.push_back(t);
    }
  }
  for (const char* x : {"a", "b"}) {
    for (const char* y : {"a", "b"}) {
      out.push_back(Term::compound("g", {Term::constant(x), Term::constant(y)}));
    }
  }
  return out;
}

inline Term ground_apply(const Term& t, const std::map<VarId, Term>& theta) {
  if (t.is_variable()) {
    auto it = theta.find(t.var_id());
    return it == theta.end() ? t : it->second;
  }
  if (t.is_constant()) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(ground_apply(a, theta));
  return Term::compound(t.name(), std::move(args));
}

inline bool unifies(const Atom& a, const Atom& b, const std::map<VarId, Term>& theta) {
  if (a.key() != b.key()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!(ground_apply(a.args[i], theta) == ground_apply(b.args[i], theta))) return false;
  }
  return true;
}

/// Every assignment of domain terms to the variables that unifies a and b.
inline std::vector<std::map<VarId, Term>> brute_unifiers(
    const Atom& a, const Atom& b, const std::vector<Term>& domain) {
  std::vector<VarId> vars;
  collect_variables(a, vars);
  collect_variables(b, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<std::map<VarId, Term>> out;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    std::map<VarId, Term> theta;
    for (std::size_t i = 0; i < vars.size(); ++i) theta.emplace(vars[i], domain[idx[i]]);
    if (unifies(a, b, theta)) out.push_back(std::move(theta));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == domain.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

/// One-way matching: extends `sigma` so that pattern·sigma == target.
inline bool match(const Term& pattern, const Term& target, std::map<VarId, Term>& sigma) {
  if (pattern.is_variable()) {
    auto [it, fresh] = sigma.emplace(pattern.var_id(), target);
    return fresh || it->second == target;
  }
  if (pattern.kind() != target.kind() || pattern.name() != target.name() ||
      pattern.arity() != target.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], sigma)) return false;
  }
  return true;
}

/// theta is an instance of the substitution s on `vars`: some sigma has
/// x·s·sigma == x·theta for every x.
inline bool subsumes(const Substitution& s, const std::map<VarId, Term>& theta) {
  std::map<VarId, Term> sigma;
  for (const auto& [v, value] : theta) {
    const Term* bound = s.lookup(v);
    Term image = bound ? *bound : Term::variable(v, "_");
    if (!match(image, value, sigma)) return false;
  }
  return true;
}

}  // namespace lpterm::testing

#endif  // LPTERM_TESTS_BRUTE_UNIFY_HPP
