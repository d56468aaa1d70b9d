#include "hbasis/system_file.hpp"

#include <fstream>
#include <sstream>

#include "hbasis/parse.hpp"

namespace hbasis {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

SystemFile parse_system_text(std::string_view text, const std::string& origin) {
  SystemFile out;
  bool have_vars = false;
  std::vector<Polynomial> polys;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                          : end - pos);
    pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    ++line_no;

    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_vars) {
      if (line.substr(0, 5) != "vars:") {
        throw SystemFileError(origin + ":" + std::to_string(line_no) +
                                  ": expected 'vars:' declaration",
                              line_no, 1);
      }
      std::istringstream names{std::string(line.substr(5))};
      for (std::string name; names >> name;) out.variables.push_back(name);
      if (out.variables.empty()) {
        throw SystemFileError(origin + ":" + std::to_string(line_no) + ": no variables declared",
                              line_no, 1);
      }
      have_vars = true;
      continue;
    }

    const std::size_t offset = static_cast<std::size_t>(line.data() - raw.data());
    try {
      Polynomial p = parse_polynomial(line, out.variables);
      if (p.is_zero()) {
        throw SystemFileError(origin + ":" + std::to_string(line_no) + ": zero polynomial",
                              line_no, 1);
      }
      polys.push_back(std::move(p));
      out.source_lines.emplace_back(line);
    } catch (const ParseError& e) {
      const std::size_t column = e.column() + offset;
      throw SystemFileError(origin + ":" + std::to_string(line_no) + ":" + std::to_string(column) +
                                ": " + e.what(),
                            line_no, column);
    }
  }
  if (!have_vars) throw SystemFileError(origin + ": missing 'vars:' declaration", 0, 0);
  if (polys.empty()) throw SystemFileError(origin + ": no polynomials", 0, 0);
  out.system = PolynomialSystem(out.variables.size(), std::move(polys));
  return out;
}

SystemFile parse_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_text(buf.str(), path.string());
}

}  // namespace hbasis
