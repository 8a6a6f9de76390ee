#include "lpterm/term.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpterm {

Term Term::variable(VarId id, std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Variable;
  rep->id = id;
  rep->name = std::move(name);
  rep->ground = false;
  return Term(std::move(rep));
}

Term Term::constant(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Constant;
  rep->name = std::move(name);
  return Term(std::move(rep));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor +
                                "' needs at least one argument");
  }
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Compound;
  rep->name = std::move(functor);
  std::size_t deepest = 0;
  for (const Term& a : args) {
    rep->size += a.size();
    deepest = std::max(deepest, a.depth());
    rep->ground = rep->ground && a.ground();
  }
  rep->depth = deepest + 1;
  rep->args = std::move(args);
  return Term(std::move(rep));
}

Term Term::list(const std::vector<Term>& items, std::optional<Term> tail) {
  Term result = tail ? *tail : constant(std::string(kEmptyList));
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    result = compound(std::string(kListFunctor), {*it, result});
  }
  return result;
}

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable:
      return a.var_id() == b.var_id();
    case Term::Kind::Constant:
      return a.name() == b.name();
    case Term::Kind::Compound:
      if (a.name() != b.name() || a.arity() != b.arity() ||
          a.size() != b.size()) {
        return false;
      }
      return std::equal(a.args().begin(), a.args().end(), b.args().begin());
  }
  return false;
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Term::Kind::Variable:
      return a.var_id() <=> b.var_id();
    case Term::Kind::Constant:
      return a.name() <=> b.name();
    case Term::Kind::Compound: {
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      if (auto c = a.arity() <=> b.arity(); c != 0) return c;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (auto c = compare_terms(a.args()[i], b.args()[i]); c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t term_size(const Term& t) { return t.size(); }

std::size_t term_size(const Atom& a) {
  std::size_t n = 0;
  for (const Term& t : a.args) n += t.size();
  return n;
}

std::size_t nesting_depth(const Term& t) { return t.depth(); }

void collect_variables(const Term& t, std::vector<VarId>& out) {
  if (t.ground()) return;
  if (t.is_variable()) {
    out.push_back(t.var_id());
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

void collect_variables(const Atom& a, std::vector<VarId>& out) {
  for (const Term& t : a.args) collect_variables(t, out);
}

bool occurs_in(VarId v, const Term& t) {
  if (t.ground()) return false;
  if (t.is_variable()) return t.var_id() == v;
  return std::any_of(t.args().begin(), t.args().end(),
                     [v](const Term& a) { return occurs_in(v, a); });
}

namespace {

bool is_list_cell(const Term& t) {
  return t.is_compound() && t.arity() == 2 && t.name() == kListFunctor;
}

void print(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
      os << t.name();
      return;
    case Term::Kind::Compound:
      break;
  }
  if (is_list_cell(t)) {
    os << '[';
    print(os, t.args()[0]);
    Term rest = t.args()[1];
    while (is_list_cell(rest)) {
      os << ',';
      print(os, rest.args()[0]);
      rest = rest.args()[1];
    }
    if (!(rest.is_constant() && rest.name() == kEmptyList)) {
      os << '|';
      print(os, rest);
    }
    os << ']';
    return;
  }
  os << t.name() << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    print(os, t.args()[i]);
  }
  os << ')';
}

void print(std::ostream& os, const Atom& a) {
  os << a.predicate;
  if (a.args.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ',';
    print(os, a.args[i]);
  }
  os << ')';
}

void print(std::ostream& os, const Literal& l) {
  if (l.negative) os << "\\+ ";
  print(os, l.atom);
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  print(os, a);
  return os.str();
}

std::string to_string(const Literal& l) {
  std::ostringstream os;
  print(os, l);
  return os.str();
}

std::string to_string(const Clause& c) {
  std::ostringstream os;
  print(os, c.head);
  if (!c.body.empty()) {
    os << " :- ";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      if (i) os << ", ";
      print(os, c.body[i]);
    }
  }
  os << '.';
  return os.str();
}

std::string to_string(std::span<const Literal> goal) {
  if (goal.empty()) return "□";
  std::ostringstream os;
  for (std::size_t i = 0; i < goal.size(); ++i) {
    if (i) os << ", ";
    print(os, goal[i]);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  print(os, a);
  return os;
}

}  // namespace lpterm
