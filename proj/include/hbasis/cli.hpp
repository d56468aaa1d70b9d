#ifndef HBASIS_CLI_HPP
#define HBASIS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hbasis/driver.hpp"
#include "hbasis/system_file.hpp"

namespace hbasis {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_string(std::string_view bytes);

// 0 Success, 2 ConstantIdeal, 3 DegreeCapReached, 4 NumericalBreakdown.
int exit_code(HBasisStatus status);

struct ReportOptions {
  bool diagnostics = false;
  bool timing = true;
  bool oracle = false;
};

struct LoadedSystem {
  std::filesystem::path path;
  std::string digest;
  SystemFile file;
};

LoadedSystem load_system(const std::filesystem::path& path);

Json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& vars);
Polynomial polynomial_from_json(const Json& j, std::size_t num_vars);
Json config_to_json(const HBasisConfig& config);

// Exact rank of C_k(F) against the numerical one, lowest degree up to
// max_degree.
struct OracleRow {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t numerical_rank = 0;
  std::size_t exact_rank = 0;
};
std::vector<OracleRow> oracle_ranks(const PolynomialSystem& system, const RankPolicy& policy,
                                    int max_degree);

Json make_run_report(const LoadedSystem& input, const HBasisConfig& config,
                     const HBasisResult& result, const ReportOptions& options);
std::string format_run_report_text(const Json& report);

// Reads the "generators" list of a compute report.
PolynomialSystem system_from_report(const Json& report);
std::vector<std::string> variables_from_report(const Json& report);

struct BenchRow {
  std::string name;
  std::string verdict;  // PASS, FAIL, XFAIL, XPASS, SKIP
  std::string detail;
  double seconds = 0.0;
};

// Runs every manifest entry in order. Throws std::runtime_error when the
// manifest is missing or malformed.
std::vector<BenchRow> run_bench(const std::filesystem::path& corpus_dir, bool timing = true);

// Entry point of the command line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbasis

#endif  // HBASIS_CLI_HPP
