#ifndef LPTERM_TESTS_SUPPORT_HPP
#define LPTERM_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lpterm/parser.hpp"

namespace lpterm::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(LPTERM_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program fixture(const std::string& name) {
  return program_from(read_fixture(name));
}

inline Query query(const std::string& text) { return query_from(text); }

/// Random programs within: 4 predicates, arity 2, 2 function symbols (one
/// unary, one binary), 6 clauses, 2 body literals. Negative literals only
/// mention head variables.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint32_t seed) : rng_(seed) {}

  std::string text() {
    const int npred = pick(1, 4);
    arity_.assign(npred, 0);
    for (int& a : arity_) a = pick(0, 2);
    const int nclauses = pick(1, 6);
    std::string out;
    for (int c = 0; c < nclauses; ++c) {
      // Every predicate gets its first clause before any repeats.
      const int head = c < npred ? c : pick(0, npred - 1);
      vars_used_ = 0;
      std::string h = atom(head, 2);
      const int head_vars = vars_used_;
      out += h;
      const int nbody = pick(0, 2);
      for (int b = 0; b < nbody; ++b) {
        out += b == 0 ? " :- " : ", ";
        const int pred = pick(0, npred - 1);
        if (head_vars > 0 && chance(0.15)) {
          limit_vars_ = head_vars;
          out += "\\+ " + atom(pred, 1);
          limit_vars_ = 0;
        } else {
          out += atom(pred, 2);
        }
      }
      out += ".\n";
    }
    return out;
  }

  Program program() { return program_from(text()); }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string atom(int pred, int depth) {
    std::string s = "p" + std::to_string(pred);
    if (arity_[pred] == 0) return s;
    s += "(";
    for (int i = 0; i < arity_[pred]; ++i) {
      if (i) s += ",";
      s += term(depth);
    }
    return s + ")";
  }

  std::string term(int depth) {
    const int kind = pick(0, depth > 0 ? 3 : 1);
    switch (kind) {
      case 0: {
        const int cap = limit_vars_ ? limit_vars_ - 1 : std::min(vars_used_, 2);
        int v = pick(0, cap);
        if (!limit_vars_ && v == vars_used_) ++vars_used_;
        return "X" + std::to_string(v);
      }
      case 1:
        return chance(0.5) ? "a" : "b";
      case 2:
        return "f(" + term(depth - 1) + ")";
      default:
        return "g(" + term(depth - 1) + "," + term(depth - 1) + ")";
    }
  }

  std::mt19937 rng_;
  std::vector<int> arity_;
  int vars_used_ = 0;
  int limit_vars_ = 0;
};

}  // namespace lpterm::testing

#endif  // LPTERM_TESTS_SUPPORT_HPP
