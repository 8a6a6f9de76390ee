#include "lpterm/program.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lpterm {

namespace {

void inventory(const Term& t, std::set<std::string>& constants,
               std::set<PredicateKey>& functions, VarId& max_var) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      max_var = std::max(max_var, t.var_id());
      return;
    case Term::Kind::Constant:
      constants.insert(t.name());
      return;
    case Term::Kind::Compound:
      functions.insert({t.name(), t.arity()});
      for (const Term& a : t.args()) inventory(a, constants, functions, max_var);
      return;
  }
}

}  // namespace

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::set<std::string> constants;
  std::set<PredicateKey> functions;
  auto note_predicate = [this](const PredicateKey& key) {
    if (std::find(predicates_.begin(), predicates_.end(), key) ==
        predicates_.end()) {
      predicates_.push_back(key);
    }
  };
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    Clause& c = clauses_[i];
    c.index = i;
    note_predicate(c.head.key());
    by_predicate_[c.head.key()].push_back(i);
    for (const Term& t : c.head.args) inventory(t, constants, functions, max_var_);
    for (const Literal& l : c.body) {
      note_predicate(l.atom.key());
      for (const Term& t : l.atom.args) {
        inventory(t, constants, functions, max_var_);
      }
    }
  }
  if (constants.empty()) {
    // Herbrand universe needs at least one constant.
    std::string name = "c0";
    for (int k = 1; functions.count({name, 1}) || functions.count({name, 2}); ++k) {
      name = "c" + std::to_string(k);
    }
    constants.insert(name);
    synthetic_constant_ = true;
  }
  constants_.assign(constants.begin(), constants.end());
  functions_.assign(functions.begin(), functions.end());

  std::map<char, std::set<std::string>> initials;
  for (const PredicateKey& k : predicates_) initials[k.name.front()].insert(k.name);
  labels_.resize(clauses_.size());
  for (const auto& [key, indices] : by_predicate_) {
    const bool unique = initials[key.name.front()].size() == 1;
    std::string stem = unique ? std::string(1, key.name.front()) : key.name;
    const bool arity_clash = std::count_if(
        predicates_.begin(), predicates_.end(),
        [&](const PredicateKey& other) { return other.name == key.name; }) > 1;
    if (arity_clash) stem += "/" + std::to_string(key.arity) + "_";
    for (std::size_t n = 0; n < indices.size(); ++n) {
      labels_[indices[n]] = "C_" + stem + std::to_string(n + 1);
    }
  }
}

const std::vector<std::size_t>& Program::clauses_for(
    const PredicateKey& key) const {
  static const std::vector<std::size_t> none;
  auto it = by_predicate_.find(key);
  return it == by_predicate_.end() ? none : it->second;
}

bool Program::defines(const PredicateKey& key) const {
  return by_predicate_.count(key) != 0;
}

std::size_t ModePattern::input_count() const {
  return static_cast<std::size_t>(std::count(input.begin(), input.end(), true));
}

std::vector<VarId> Query::input_variables() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < atom.args.size() && i < pattern.input.size(); ++i) {
    if (pattern.input[i] && atom.args[i].is_variable()) {
      out.push_back(atom.args[i].var_id());
    }
  }
  return out;
}

void Query::validate() const {
  if (pattern.input.size() != atom.args.size()) {
    throw std::invalid_argument("mode pattern arity does not match query atom");
  }
  std::vector<VarId> inputs;
  std::vector<VarId> others;
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    if (pattern.input[i]) {
      if (!atom.args[i].is_variable()) {
        throw std::invalid_argument("input-mode position must hold a variable");
      }
      inputs.push_back(atom.args[i].var_id());
    } else {
      collect_variables(atom.args[i], others);
    }
  }
  std::vector<VarId> sorted = inputs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("input variables must be distinct");
  }
  for (VarId v : inputs) {
    if (std::find(others.begin(), others.end(), v) != others.end()) {
      throw std::invalid_argument(
          "input variable also occurs at an open position");
    }
  }
}

std::string to_string(const Query& q) {
  std::ostringstream os;
  os << q.atom.predicate;
  if (q.atom.args.empty()) return os.str();
  os << '(';
  for (std::size_t i = 0; i < q.atom.args.size(); ++i) {
    if (i) os << ',';
    if (i < q.pattern.input.size() && q.pattern.input[i]) os << '@';
    os << q.atom.args[i];
  }
  os << ')';
  return os.str();
}

std::string_view verdict_token(Verdict v) {
  switch (v) {
    case Verdict::Terminating:
      return "TERMINATING";
    case Verdict::MostLikelyTerminating:
      return "MOST_LIKELY_TERMINATING";
    case Verdict::NonTerminating:
      return "NON_TERMINATING";
    case Verdict::MostLikelyNonTerminating:
      return "MOST_LIKELY_NON_TERMINATING";
  }
  return "?";
}

bool is_terminating_side(Verdict v) {
  return v == Verdict::Terminating || v == Verdict::MostLikelyTerminating;
}

PmaxTable pmax_table(const Program& p) {
  PmaxTable table;
  for (const PredicateKey& key : p.predicates()) {
    std::vector<std::size_t> row(key.arity, 0);
    for (std::size_t idx : p.clauses_for(key)) {
      const Atom& head = p.clause(idx).head;
      for (std::size_t i = 0; i < row.size(); ++i) {
        row[i] = std::max(row[i], nesting_depth(head.args[i]));
      }
    }
    table.emplace(key, std::move(row));
  }
  return table;
}

namespace {

bool variant_terms(const Term& a, const Term& b, std::map<VarId, VarId>& fwd,
                   std::map<VarId, VarId>& bwd) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: {
      auto [f, fnew] = fwd.emplace(a.var_id(), b.var_id());
      auto [r, rnew] = bwd.emplace(b.var_id(), a.var_id());
      return f->second == b.var_id() && r->second == a.var_id();
    }
    case Term::Kind::Constant:
      return a.name() == b.name();
    case Term::Kind::Compound:
      if (a.name() != b.name() || a.arity() != b.arity() ||
          a.size() != b.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!variant_terms(a.args()[i], b.args()[i], fwd, bwd)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

bool is_variant(const Atom& a, const Atom& b) {
  if (a.key() != b.key()) return false;
  std::map<VarId, VarId> fwd;
  std::map<VarId, VarId> bwd;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!variant_terms(a.args[i], b.args[i], fwd, bwd)) return false;
  }
  return true;
}

}  // namespace lpterm
