#include "lpterm/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace lpterm {

namespace {

enum class Tok {
  Name,
  Var,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Bar,
  Neck,  // :-
  Not,   // \+
  At,
  End,   // full stop
  Eof,
  Bad,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Token t{Tok::Eof, "", line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      auto is_word = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
      };
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Name;
        while (pos_ < src_.size() && is_word(src_[pos_])) t.text += advance();
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Var;
        while (pos_ < src_.size() && is_word(src_[pos_])) t.text += advance();
      } else if (c == ':' && peek(1) == '-') {
        t.kind = Tok::Neck;
        t.text = ":-";
        advance();
        advance();
      } else if (c == '\\' && peek(1) == '+') {
        t.kind = Tok::Not;
        t.text = "\\+";
        advance();
        advance();
      } else {
        t.text = std::string(1, advance());
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '[': t.kind = Tok::LBracket; break;
          case ']': t.kind = Tok::RBracket; break;
          case ',': t.kind = Tok::Comma; break;
          case '|': t.kind = Tok::Bar; break;
          case '@': t.kind = Tok::At; break;
          case '.': t.kind = Tok::End; break;
          default: t.kind = Tok::Bad; break;
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Failure {
  SourceError error;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  Parsed<Program> program() {
    Parsed<Program> out;
    std::vector<Clause> clauses;
    while (cur().kind != Tok::Eof) {
      try {
        Clause c = clause();
        c.index = clauses.size();
        clauses.push_back(std::move(c));
      } catch (const Failure& f) {
        out.errors.push_back(f.error);
        recover();
      }
    }
    if (out.errors.empty()) out.value = Program(std::move(clauses));
    return out;
  }

  Parsed<Query> query() {
    Parsed<Query> out;
    try {
      Query q = query_atom();
      if (cur().kind == Tok::End) ++pos_;
      if (cur().kind != Tok::Eof) fail("unexpected text after query");
      out.value = std::move(q);
    } catch (const Failure& f) {
      out.errors.push_back(f.error);
    }
    return out;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = cur();
    throw Failure{{t.line, t.column, message,
                   t.kind == Tok::Eof ? "end of input" : t.text}};
  }

  const Token& expect(Tok kind, const char* what) {
    if (cur().kind != kind) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  void recover() {
    while (cur().kind != Tok::Eof && cur().kind != Tok::End) ++pos_;
    if (cur().kind == Tok::End) ++pos_;
  }

  Clause clause() {
    vars_.clear();
    Clause c;
    c.head = atom();
    if (cur().kind == Tok::Neck) {
      ++pos_;
      c.body.push_back(literal());
      while (cur().kind == Tok::Comma) {
        ++pos_;
        c.body.push_back(literal());
      }
    }
    expect(Tok::End, "'.' at end of clause");
    return c;
  }

  Literal literal() {
    if (cur().kind == Tok::Not) {
      ++pos_;
      return Literal{true, atom()};
    }
    if (cur().kind != Tok::Name) fail("expected a literal");
    return Literal{false, atom()};
  }

  Atom atom() {
    if (cur().kind != Tok::Name) fail("expected a predicate name");
    Atom a{toks_[pos_++].text, {}};
    if (cur().kind == Tok::LParen) {
      ++pos_;
      a.args.push_back(term());
      while (cur().kind == Tok::Comma) {
        ++pos_;
        a.args.push_back(term());
      }
      expect(Tok::RParen, "')'");
    }
    return a;
  }

  Term term() {
    switch (cur().kind) {
      case Tok::Var:
        return variable(toks_[pos_++].text);
      case Tok::Name: {
        std::string name = toks_[pos_++].text;
        if (cur().kind != Tok::LParen) return Term::constant(std::move(name));
        ++pos_;
        std::vector<Term> args{term()};
        while (cur().kind == Tok::Comma) {
          ++pos_;
          args.push_back(term());
        }
        expect(Tok::RParen, "')'");
        return Term::compound(std::move(name), std::move(args));
      }
      case Tok::LBracket:
        return list();
      default:
        fail("expected a term");
    }
  }

  Term list() {
    expect(Tok::LBracket, "'['");
    if (cur().kind == Tok::RBracket) {
      ++pos_;
      return Term::constant(std::string(kEmptyList));
    }
    std::vector<Term> items{term()};
    while (cur().kind == Tok::Comma) {
      ++pos_;
      items.push_back(term());
    }
    std::optional<Term> tail;
    if (cur().kind == Tok::Bar) {
      ++pos_;
      tail = term();
    }
    expect(Tok::RBracket, "']'");
    return Term::list(items, std::move(tail));
  }

  Term variable(const std::string& name) {
    if (name == "_") {
      VarId id{next_var_++};
      return Term::variable(id, "_G" + std::to_string(id.value));
    }
    auto it = vars_.find(name);
    if (it == vars_.end()) {
      it = vars_.emplace(name, Term::variable(VarId{next_var_++}, name)).first;
    }
    return it->second;
  }

  Query query_atom() {
    vars_.clear();
    if (cur().kind != Tok::Name) fail("expected a predicate name");
    Query q;
    q.atom.predicate = toks_[pos_++].text;
    if (cur().kind == Tok::LParen) {
      ++pos_;
      std::set<std::string> inputs;
      std::set<std::string> open;
      while (true) {
        if (cur().kind == Tok::At) {
          ++pos_;
          if (cur().kind != Tok::Var || cur().text == "_") {
            fail("expected a variable name after '@'");
          }
          const std::string& name = cur().text;
          if (!inputs.insert(name).second) fail("duplicate input variable");
          if (open.count(name)) fail("input variable also used as an ordinary variable");
          q.atom.args.push_back(variable(name));
          q.pattern.input.push_back(true);
          ++pos_;
        } else {
          const std::size_t before = pos_;
          Term t = term();
          for (std::size_t k = before; k < pos_; ++k) {
            if (toks_[k].kind != Tok::Var) continue;
            if (inputs.count(toks_[k].text)) {
              pos_ = k;
              fail("input variable also used as an ordinary variable");
            }
            open.insert(toks_[k].text);
          }
          q.atom.args.push_back(std::move(t));
          q.pattern.input.push_back(false);
        }
        if (cur().kind != Tok::Comma) break;
        ++pos_;
      }
      expect(Tok::RParen, "')'");
    }
    return q;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Term> vars_;
  std::uint64_t next_var_ = 1;
};

}  // namespace

std::string to_string(const SourceError& e) {
  std::ostringstream os;
  os << e.line << ':' << e.column << ": " << e.message;
  if (!e.lexeme.empty()) os << " near '" << e.lexeme << "'";
  return os.str();
}

Parsed<Program> parse_program(std::string_view text) {
  return Parser(text).program();
}

Parsed<Query> parse_query(std::string_view text) {
  return Parser(text).query();
}

namespace {

std::string joined(const std::vector<SourceError>& errors) {
  std::string out;
  for (const SourceError& e : errors) {
    if (!out.empty()) out += '\n';
    out += to_string(e);
  }
  return out;
}

}  // namespace

ParseFailure::ParseFailure(std::vector<SourceError> errors)
    : std::runtime_error(joined(errors)), errors_(std::move(errors)) {}

Program program_from(std::string_view text) {
  auto r = parse_program(text);
  if (!r.ok()) throw ParseFailure(std::move(r.errors));
  return std::move(*r.value);
}

Query query_from(std::string_view text) {
  auto r = parse_query(text);
  if (!r.ok()) throw ParseFailure(std::move(r.errors));
  return std::move(*r.value);
}

std::string to_string(const Program& p) {
  std::string out;
  for (const Clause& c : p.clauses()) {
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace lpterm
