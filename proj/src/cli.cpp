#include "hbasis/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hbasis/exact.hpp"
#include "hbasis/parse.hpp"
#include "hbasis/reduction.hpp"

namespace hbasis {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

int exit_code(HBasisStatus status) {
  switch (status) {
    case HBasisStatus::Success: return 0;
    case HBasisStatus::ConstantIdeal: return 2;
    case HBasisStatus::DegreeCapReached: return 3;
    case HBasisStatus::NumericalBreakdown: return 4;
  }
  return 1;
}

LoadedSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open system file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  LoadedSystem out;
  out.path = path;
  out.digest = digest_string(text);
  out.file = parse_system_text(text, path.string());
  return out;
}

Json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) {
    Json e = Json::array();
    for (int x : a.exponents()) e.push_back(x);
    terms.push_back(Json{{"exponents", e}, {"coefficient", c}});
  }
  Json out;
  out["degree"] = p.degree();
  out["terms"] = std::move(terms);
  out["text"] = format_polynomial(p, vars);
  return out;
}

Polynomial polynomial_from_json(const Json& j, std::size_t num_vars) {
  Polynomial p(num_vars);
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("exponents").get<std::vector<int>>();
    if (e.size() != num_vars) throw std::runtime_error("report term has wrong arity");
    p.add_term(MultiIndex(e), t.at("coefficient").get<double>());
  }
  return p;
}

namespace {

std::string strategy_name(RankStrategy s) { return s == RankStrategy::GapMax ? "gap" : "tolerance"; }
std::string bound_rule_name(BoundRule r) {
  return r == BoundRule::PairwiseLcm ? "pairwise-lcm" : "doubled-max";
}

}  // namespace

Json config_to_json(const HBasisConfig& config) {
  Json out;
  out["epsilon"] = config.epsilon;
  out["zero_test"] = config.zero_test == ZeroTest::Relative ? "relative" : "absolute";
  out["rank_strategy"] = strategy_name(config.rank_policy.strategy);
  if (config.rank_policy.tau_override) {
    out["tau"] = *config.rank_policy.tau_override;
  } else {
    out["tau"] = "auto";
  }
  out["normalize"] = to_string(config.normalize);
  out["bound_rule"] = bound_rule_name(config.bound_rule);
  if (config.max_degree_cap) {
    out["max_degree"] = *config.max_degree_cap;
  } else {
    out["max_degree"] = nullptr;
  }
  return out;
}

std::vector<OracleRow> oracle_ranks(const PolynomialSystem& system, const RankPolicy& policy,
                                    int max_degree) {
  std::vector<OracleRow> out;
  for (int k = system.min_degree(); k <= max_degree; ++k) {
    const MacaulayMatrix c = build_macaulay(system, k);
    OracleRow row;
    row.degree = k;
    row.rows = static_cast<std::size_t>(c.matrix.rows());
    row.cols = c.layout.total_cols;
    if (row.cols > 0) {
      const SvdResult dec = svd(c.matrix, SvdMode::Thin);
      row.numerical_rank = numerical_rank(dec.singular_values, policy, row.rows, row.cols);
      row.exact_rank = exact_rank(exact_macaulay(system, k));
    }
    out.push_back(row);
  }
  return out;
}

namespace {

Json diagnostics_to_json(const DegreeDiagnostics& d) {
  Json j;
  j["step"] = d.step;
  j["degree"] = d.degree;
  j["rows"] = d.rows;
  j["cols"] = d.cols;
  j["rank"] = d.rank;
  j["nullity"] = d.nullity;
  j["pure"] = d.pure_count;
  j["tau"] = d.tau;
  j["min_accepted_sigma"] = d.min_accepted_sigma;
  j["max_rejected_sigma"] = d.max_rejected_sigma;
  j["from_update"] = d.from_update;
  if (d.from_update) {
    j["extension_rank"] = d.extension_rank;
    j["extension_cols"] = d.extension_cols;
    j["pure_rank"] = d.pure_rank;
    j["extension_gap"] = std::isfinite(d.extension_gap) ? Json(d.extension_gap) : Json("inf");
    j["pure_gap"] = std::isfinite(d.pure_gap) ? Json(d.pure_gap) : Json("inf");
  }
  j["remainder_norms"] = d.remainder_norms;
  j["new_leading_monomials"] = d.new_leading_monomials;
  j["bound_after"] = d.bound_after;
  j["appended_degree"] = d.appended_degree ? Json(*d.appended_degree) : Json(nullptr);
  return j;
}

}  // namespace

Json make_run_report(const LoadedSystem& input, const HBasisConfig& config,
                     const HBasisResult& result, const ReportOptions& options) {
  const auto& vars = input.file.variables;
  Json report;
  report["input"] = Json{{"file", input.path.filename().string()},
                         {"digest", input.digest},
                         {"variables", vars},
                         {"polynomials", input.file.system.size()},
                         {"degrees", input.file.system.degrees()}};
  report["config"] = config_to_json(config);
  report["status"] = to_string(result.status);
  report["message"] = result.message;
  Json gens = Json::array();
  for (const auto& g : result.generators.generators()) gens.push_back(polynomial_to_json(g, vars));
  report["generator_count"] = result.generators.size();
  report["generators"] = std::move(gens);
  report["d_max"] = result.d_max;
  report["final_bound"] = result.final_bound;
  Json hist = Json::array();
  for (const auto& [k, b] : result.bound_history) hist.push_back(Json::array({k, b}));
  report["bound_history"] = std::move(hist);
  report["appended"] = result.appended;
  if (result.verified) {
    report["verified"] = *result.verified;
    report["verification_max_remainder"] = result.verification_max_remainder;
  }
  Json log = Json::array();
  for (const auto& d : result.diagnostics) {
    if (d.remainder_norms.empty()) continue;
    log.push_back(Json{{"step", d.step}, {"degree", d.degree}, {"norms", d.remainder_norms}});
  }
  report["remainder_log"] = std::move(log);
  if (options.diagnostics) {
    Json diag = Json::array();
    for (const auto& d : result.diagnostics) diag.push_back(diagnostics_to_json(d));
    report["diagnostics"] = std::move(diag);
  }
  if (options.oracle) {
    const PolynomialSystem normalized = normalize_system(input.file.system, config.normalize);
    const int top = std::min(6, std::max(result.final_bound, normalized.min_degree()));
    Json rows = Json::array();
    bool agree = true;
    for (const auto& r : oracle_ranks(normalized, config.rank_policy, top)) {
      agree = agree && r.numerical_rank == r.exact_rank;
      rows.push_back(Json{{"degree", r.degree},
                          {"rows", r.rows},
                          {"cols", r.cols},
                          {"numerical_rank", r.numerical_rank},
                          {"exact_rank", r.exact_rank}});
    }
    report["oracle"] = Json{{"agree", agree}, {"ranks", std::move(rows)}};
  }
  if (options.timing) report["wall_seconds"] = result.wall_seconds;
  return report;
}

std::string format_run_report_text(const Json& report) {
  std::ostringstream out;
  out << "file        " << report["input"]["file"].get<std::string>() << "\n";
  out << "digest      " << report["input"]["digest"].get<std::string>() << "\n";
  out << "status      " << report["status"].get<std::string>();
  if (!report["message"].get<std::string>().empty()) {
    out << " (" << report["message"].get<std::string>() << ")";
  }
  out << "\n";
  out << "generators  " << report["generator_count"].get<std::size_t>() << "\n";
  out << "d_max       " << report["d_max"].get<int>() << "\n";
  out << "bound       " << report["final_bound"].get<int>() << "\n";
  if (report.contains("verified")) {
    out << "verified    " << (report["verified"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (report.contains("wall_seconds")) {
    out << "seconds     " << std::fixed << std::setprecision(3)
        << report["wall_seconds"].get<double>() << std::defaultfloat << "\n";
  }
  std::size_t i = 1;
  for (const auto& g : report["generators"]) {
    out << "h" << i++ << " = " << g["text"].get<std::string>() << "\n";
  }
  if (report.contains("diagnostics")) {
    out << "\n step   k    rows    cols  rank  null  pure         tau   min_sigma   max_sigma  append\n";
    for (const auto& d : report["diagnostics"]) {
      char line[160];
      const Json& app = d["appended_degree"];
      std::snprintf(line, sizeof line, "%5zu %3d %7zu %7zu %5zu %5zu %5zu %11.3e %11.3e %11.3e  %s\n",
                    d["step"].get<std::size_t>(), d["degree"].get<int>(),
                    d["rows"].get<std::size_t>(), d["cols"].get<std::size_t>(),
                    d["rank"].get<std::size_t>(), d["nullity"].get<std::size_t>(),
                    d["pure"].get<std::size_t>(), d["tau"].get<double>(),
                    d["min_accepted_sigma"].get<double>(), d["max_rejected_sigma"].get<double>(),
                    app.is_null() ? "-" : std::to_string(app.get<int>()).c_str());
      out << line;
    }
  }
  if (report.contains("oracle")) {
    out << "\noracle      " << (report["oracle"]["agree"].get<bool>() ? "agree" : "DISAGREE")
        << "\n";
    for (const auto& r : report["oracle"]["ranks"]) {
      out << "  k=" << r["degree"].get<int>() << " numerical " << r["numerical_rank"].get<std::size_t>()
          << " exact " << r["exact_rank"].get<std::size_t>() << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> variables_from_report(const Json& report) {
  return report.at("input").at("variables").get<std::vector<std::string>>();
}

PolynomialSystem system_from_report(const Json& report) {
  const std::size_t n = variables_from_report(report).size();
  std::vector<Polynomial> gens;
  for (const auto& g : report.at("generators")) gens.push_back(polynomial_from_json(g, n));
  return PolynomialSystem(n, std::move(gens));
}

namespace {

Normalization parse_normalization(const std::string& s) {
  if (s == "none") return Normalization::None;
  if (s == "l1") return Normalization::L1;
  if (s == "l2") return Normalization::L2;
  if (s == "linf") return Normalization::LInf;
  throw std::runtime_error("unknown normalization '" + s + "'");
}

bool matches(const Json& expect, const HBasisResult& r) {
  if (expect.contains("status") && expect["status"].get<std::string>() != to_string(r.status)) {
    return false;
  }
  if (expect.contains("generators") && expect["generators"].get<std::size_t>() != r.generators.size()) {
    return false;
  }
  if (expect.contains("d_max") && expect["d_max"].get<int>() != r.d_max) return false;
  if (expect.contains("bound") && expect["bound"].get<int>() != r.final_bound) return false;
  return true;
}

std::string outcome(const HBasisResult& r) {
  return to_string(r.status) + " " + std::to_string(r.generators.size()) + "/" +
         std::to_string(r.d_max) + "/" + std::to_string(r.final_bound);
}

}  // namespace

std::vector<BenchRow> run_bench(const std::filesystem::path& corpus_dir, bool timing) {
  const auto manifest_path = corpus_dir / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("missing manifest " + manifest_path.string());
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::runtime_error("malformed manifest " + manifest_path.string() + ": " + e.what());
  }
  if (!manifest.contains("entries") || !manifest["entries"].is_array()) {
    throw std::runtime_error("manifest " + manifest_path.string() + " has no entries array");
  }

  std::vector<BenchRow> rows;
  for (const auto& e : manifest["entries"]) {
    BenchRow row;
    row.name = e.at("name").get<std::string>();
    const auto file = corpus_dir / e.at("file").get<std::string>();
    const bool optional = e.value("optional", false);
    if (!std::filesystem::exists(file)) {
      row.verdict = optional ? "SKIP" : "FAIL";
      row.detail = "missing " + file.filename().string();
      rows.push_back(row);
      continue;
    }
    HBasisConfig config;
    config.epsilon = e.value("epsilon", 1e-10);
    config.normalize = parse_normalization(e.value("normalize", std::string("none")));
    config.diagnostics = false;
    const LoadedSystem sys = load_system(file);
    const HBasisResult r = compute_hbasis(sys.file.system, config);
    row.seconds = timing ? r.wall_seconds : 0.0;
    const Json& expect = e.at("expect");
    const bool xfail = e.value("xfail", false);
    if (matches(expect, r)) {
      row.verdict = xfail ? "XFAIL" : "PASS";
    } else if (const Json alts = e.value("accept", Json::array());
               std::any_of(alts.begin(), alts.end(),
                           [&](const Json& alt) { return matches(alt, r); })) {
      row.verdict = "XFAIL";
    } else {
      row.verdict = xfail ? "XPASS" : "FAIL";
    }
    row.detail = outcome(r);
    rows.push_back(row);
  }
  return rows;
}

namespace {

struct ComputeFlags {
  std::string file;
  double epsilon = 1e-10;
  std::string tau = "auto";
  std::string rank_strategy = "tolerance";
  std::string normalize = "none";
  std::string zero_test = "relative";
  std::string bound_rule = "doubled-max";
  int max_degree = 0;
  std::string output = "json";
  bool diagnostics = false;
  bool oracle = false;
  bool no_timing = false;
  bool no_verify = false;
};

void add_config_flags(CLI::App* cmd, ComputeFlags& f) {
  cmd->add_option("file", f.file, "system file")->required();
  cmd->add_option("--epsilon", f.epsilon, "remainder zero threshold")->capture_default_str();
  cmd->add_option("--tau", f.tau, "rank threshold: auto or a number")->capture_default_str();
  cmd->add_option("--rank-strategy", f.rank_strategy)
      ->check(CLI::IsMember({"tolerance", "gap"}))
      ->capture_default_str();
  cmd->add_option("--normalize", f.normalize)
      ->check(CLI::IsMember({"none", "l1", "l2", "linf"}))
      ->capture_default_str();
  cmd->add_option("--zero-test", f.zero_test)
      ->check(CLI::IsMember({"absolute", "relative"}))
      ->capture_default_str();
  cmd->add_option("--output", f.output)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

HBasisConfig make_config(const ComputeFlags& f) {
  HBasisConfig c;
  if (!(f.epsilon > 0.0)) throw CLI::ValidationError("--epsilon", "must be positive");
  c.epsilon = f.epsilon;
  if (f.tau != "auto") {
    double t = 0.0;
    try {
      std::size_t used = 0;
      t = std::stod(f.tau, &used);
      if (used != f.tau.size()) throw std::invalid_argument(f.tau);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--tau", "expected 'auto' or a number, got '" + f.tau + "'");
    }
    if (!(t >= 0.0)) throw CLI::ValidationError("--tau", "must be non-negative");
    c.rank_policy.tau_override = t;
  }
  c.rank_policy.strategy = f.rank_strategy == "gap" ? RankStrategy::GapMax : RankStrategy::Tolerance;
  c.normalize = parse_normalization(f.normalize);
  c.zero_test = f.zero_test == "relative" ? ZeroTest::Relative : ZeroTest::Absolute;
  c.bound_rule = f.bound_rule == "pairwise-lcm" ? BoundRule::PairwiseLcm : BoundRule::DoubledMaxDegree;
  if (f.max_degree > 0) c.max_degree_cap = f.max_degree;
  c.verify = !f.no_verify;
  return c;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_compute(const ComputeFlags& f, std::ostream& out) {
  const HBasisConfig config = make_config(f);
  const LoadedSystem input = load_system(f.file);
  const HBasisResult result = compute_hbasis(input.file.system, config);
  ReportOptions opts;
  opts.diagnostics = f.diagnostics;
  opts.oracle = f.oracle;
  opts.timing = !f.no_timing;
  const Json report = make_run_report(input, config, result, opts);
  if (f.output == "json") {
    write_json(out, report);
  } else {
    out << format_run_report_text(report);
  }
  return exit_code(result.status);
}

struct ReduceFlags {
  ComputeFlags base;
  std::string poly;
  bool against_hbasis = false;
  std::string report_path;
};

int cmd_reduce(const ReduceFlags& f, std::ostream& out) {
  const HBasisConfig config = make_config(f.base);
  const LoadedSystem input = load_system(f.base.file);
  const auto& vars = input.file.variables;
  const Polynomial p = parse_polynomial(f.poly, vars);

  PolynomialSystem basis;
  std::string basis_kind = "input";
  if (!f.report_path.empty()) {
    std::ifstream in(f.report_path);
    if (!in) throw std::runtime_error("cannot open report " + f.report_path);
    const Json report = Json::parse(in);
    if (variables_from_report(report) != vars) {
      throw std::runtime_error("report variables differ from the system file");
    }
    basis = system_from_report(report);
    basis_kind = "report";
  } else if (f.against_hbasis) {
    HBasisConfig c = config;
    c.diagnostics = false;
    const HBasisResult r = compute_hbasis(input.file.system, c);
    if (r.status != HBasisStatus::Success) {
      throw std::runtime_error("H-basis computation ended with " + to_string(r.status));
    }
    basis = r.generators;
    basis_kind = "hbasis";
  } else {
    basis = input.file.system;
  }
  basis = normalize_system(basis, config.normalize);

  const ReductionResult red = reduce(p, basis, config.rank_policy);
  const bool member = is_numerically_zero(red.remainder, config.epsilon, config.zero_test, p.norm2());

  Json j;
  j["input"] = Json{{"file", input.path.filename().string()}, {"digest", input.digest}};
  j["basis"] = basis_kind;
  j["config"] = config_to_json(config);
  j["polynomial"] = polynomial_to_json(p, vars);
  Json qs = Json::array();
  for (const auto& q : red.quotients) qs.push_back(polynomial_to_json(q, vars));
  j["quotients"] = std::move(qs);
  j["remainder"] = polynomial_to_json(red.remainder, vars);
  j["remainder_norm"] = red.remainder.norm2();
  Json per = Json::array();
  for (const auto& [k, nrm] : red.remainder_norms_per_degree) per.push_back(Json::array({k, nrm}));
  j["remainder_norms_per_degree"] = std::move(per);
  j["reconstruction_residual"] = red.reconstruction_residual;
  j["member"] = member;

  if (f.base.output == "json") {
    write_json(out, j);
  } else {
    out << "basis       " << basis_kind << " (" << basis.size() << " generators)\n";
    for (std::size_t i = 0; i < red.quotients.size(); ++i) {
      out << "q" << i + 1 << " = " << format_polynomial(red.quotients[i], vars) << "\n";
    }
    out << "remainder   " << format_polynomial(red.remainder, vars) << "\n";
    out << "norm        " << red.remainder.norm2() << "\n";
    out << "member      " << (member ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& dir, const std::string& output, bool timing, std::ostream& out) {
  const auto rows = run_bench(dir, timing);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.verdict != "FAIL" && r.verdict != "XPASS";
  if (output == "json") {
    Json j = Json::array();
    for (const auto& r : rows) {
      Json e{{"name", r.name}, {"verdict", r.verdict}, {"detail", r.detail}};
      if (timing) e["seconds"] = r.seconds;
      j.push_back(std::move(e));
    }
    write_json(out, Json{{"rows", std::move(j)}, {"ok", ok}});
  } else {
    for (const auto& r : rows) {
      char line[200];
      std::snprintf(line, sizeof line, "%-6s %-28s %-28s", r.verdict.c_str(), r.name.c_str(),
                    r.detail.c_str());
      out << line;
      if (timing && r.verdict != "SKIP") out << std::fixed << std::setprecision(2) << r.seconds << "s";
      out << std::defaultfloat << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical H-basis computation", "hbasis"};
  app.require_subcommand(1);

  ComputeFlags compute;
  auto* c = app.add_subcommand("compute", "compute an H-basis of a system file");
  add_config_flags(c, compute);
  c->add_option("--bound-rule", compute.bound_rule)
      ->check(CLI::IsMember({"doubled-max", "pairwise-lcm"}))
      ->capture_default_str();
  c->add_option("--max-degree", compute.max_degree, "degree cap (default 3 * initial bound)");
  c->add_flag("--diagnostics", compute.diagnostics, "per-degree rank and gap log");
  c->add_flag("--oracle", compute.oracle, "exact rank cross-check of C_k for k <= 6");
  c->add_flag("--no-timing", compute.no_timing, "omit wall clock time from the report");
  c->add_flag("--no-verify", compute.no_verify, "skip the final syzygy re-check");

  ReduceFlags reduce_flags;
  auto* r = app.add_subcommand("reduce", "reduce a polynomial against a system");
  add_config_flags(r, reduce_flags.base);
  r->add_option("--poly", reduce_flags.poly, "polynomial to reduce")->required();
  auto* hb = r->add_flag("--hbasis", reduce_flags.against_hbasis,
                         "compute the H-basis first and reduce against it");
  r->add_option("--report", reduce_flags.report_path, "reduce against the generators of a report")
      ->excludes(hb);

  std::string bench_dir = "corpus";
  std::string bench_output = "text";
  bool bench_no_timing = false;
  auto* b = app.add_subcommand("bench", "run the corpus manifest");
  b->add_option("dir", bench_dir, "corpus directory")->capture_default_str();
  b->add_option("--output", bench_output)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  b->add_flag("--no-timing", bench_no_timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (r->parsed()) return cmd_reduce(reduce_flags, out);
    return cmd_bench(bench_dir, bench_output, !bench_no_timing, out);
  } catch (const CLI::ValidationError& e) {
    err << "hbasis: " << e.what() << "\n";
    return 1;
  } catch (const SystemFileError& e) {
    err << "hbasis: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "hbasis: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "hbasis: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hbasis
