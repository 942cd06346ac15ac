#ifndef ILC_SYNTAX_HPP_
#define ILC_SYNTAX_HPP_

#include <set>
#include <string>
#include <string_view>

#include "ilc/delta.hpp"
#include "ilc/term.hpp"

namespace ilc {

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::set<std::string> expected,
             std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::set<std::string> expected_;
  std::string found_;
};

Term parse_term(std::string_view text);
Context parse_context(std::string_view text);
Delta parse_delta(std::string_view text);

// Minimal parenthesization; parse_term(pretty_term(t)) == t.
std::string pretty_term(const Term& t);
std::string pretty_context(const Context& c);
std::string pretty_delta(const Delta& d);

}  // namespace ilc

#endif  // ILC_SYNTAX_HPP_
