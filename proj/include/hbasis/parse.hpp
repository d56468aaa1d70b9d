#ifndef HBASIS_PARSE_HPP
#define HBASIS_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hbasis/polynomial.hpp"

namespace hbasis {

// Syntax or name error; column is 1-based within the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Grammar:
//   polynomial ::= term (('+'|'-') term)*
//   term       ::= [sign] coeff | [sign] [coeff '*'] factor ('*' factor)*
//   factor     ::= var ['^' posint]
// Whitespace is insignificant; '*' is required between factors.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

// Terms in graded-lex descending order, coefficients with 17 significant digits.
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& vars);

}  // namespace hbasis

#endif  // HBASIS_PARSE_HPP
