#ifndef LPTERM_PARSER_HPP
#define LPTERM_PARSER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpterm/program.hpp"

namespace lpterm {

/// Positions are 1-based.
struct SourceError {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
  std::string lexeme;
};

std::string to_string(const SourceError& e);

template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<SourceError> errors;

  bool ok() const { return value.has_value(); }
};

/// Parses a clause file. On a malformed clause, parsing resumes after the
/// next full stop so that several errors can be reported at once.
Parsed<Program> parse_program(std::string_view text);

/// Parses `p(@I, V2, f(a))`; an argument `@Name` marks an input position.
/// The trailing full stop is optional.
Parsed<Query> parse_query(std::string_view text);

/// Convenience wrappers that throw ParseFailure instead.
class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(std::vector<SourceError> errors);
  const std::vector<SourceError>& errors() const { return errors_; }

 private:
  std::vector<SourceError> errors_;
};

Program program_from(std::string_view text);
Query query_from(std::string_view text);

/// Clause-per-line rendering that parse_program reads back.
std::string to_string(const Program& p);

}  // namespace lpterm

#endif  // LPTERM_PARSER_HPP
