#ifndef HBASIS_SYSTEM_FILE_HPP
#define HBASIS_SYSTEM_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hbasis/polynomial.hpp"

namespace hbasis {

// Parsed system file:
//   vars: x y z
//   # comment
//   x*y^2*z + y^4 + x^2
struct SystemFile {
  std::vector<std::string> variables;
  PolynomialSystem system;
  std::vector<std::string> source_lines;  // polynomial lines as written
};

class SystemFileError : public std::runtime_error {
 public:
  SystemFileError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

SystemFile parse_system_text(std::string_view text, const std::string& origin = "<input>");
SystemFile parse_system_file(const std::filesystem::path& path);

}  // namespace hbasis

#endif  // HBASIS_SYSTEM_FILE_HPP
