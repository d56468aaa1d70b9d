#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hbasis/cli.hpp"
#include "hbasis/reduction.hpp"
#include "test_util.hpp"

using namespace hbasis;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hbasis");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string corpus_file(const std::string& name) { return (test::corpus_dir() / name).string(); }

// A fresh directory under the system temp dir, removed on destruction.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("hbasis-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("fnv1a64 digest") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(digest_string("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("exit codes") {
  CHECK(exit_code(HBasisStatus::Success) == 0);
  CHECK(exit_code(HBasisStatus::ConstantIdeal) == 2);
  CHECK(exit_code(HBasisStatus::DegreeCapReached) == 3);
  CHECK(exit_code(HBasisStatus::NumericalBreakdown) == 4);
}

TEST_CASE("polynomial json round trip") {
  const std::vector<std::string> vars{"x", "y"};
  const Polynomial p = test::poly("0.1*x^2*y - 3*y + 7", vars);
  const Json j = polynomial_to_json(p, vars);
  CHECK(j.at("degree") == 3);
  CHECK(polynomial_from_json(j, 2) == p);
}

TEST_CASE("compute reports") {
  const Run r = run({"compute", corpus_file("x-y-trivial.sys"), "--no-timing"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("status") == "Success");
  CHECK(j.at("generator_count") == 2);
  CHECK(j.at("final_bound") == 2);
  CHECK(j.at("input").at("digest").get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK_FALSE(j.contains("wall_seconds"));

  const Run text = run({"compute", corpus_file("liu.sys"), "--output", "text", "--diagnostics"});
  CHECK(text.code == 0);
  CHECK(text.out.find("Success") != std::string::npos);
}

TEST_CASE("reports without timing are byte identical") {
  const auto a = run({"compute", corpus_file("liu.sys"), "--no-timing", "--diagnostics"});
  const auto b = run({"compute", corpus_file("liu.sys"), "--no-timing", "--diagnostics"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("status exit codes from the tool") {
  TempDir dir("status");
  const auto constant = dir.write("constant.sys", "vars: x y\nx\nx - 1\n");
  const Run c = run({"compute", constant.string(), "--no-timing"});
  CHECK(c.code == 2);
  CHECK(Json::parse(c.out).at("status") == "ConstantIdeal");

  const Run cap = run({"compute", corpus_file("liu.sys"), "--max-degree", "5"});
  CHECK(cap.code == 3);
}

TEST_CASE("usage and input errors exit with 1") {
  CHECK(run({"compute", "/nonexistent/file.sys"}).code == 1);
  CHECK(run({"compute", corpus_file("liu.sys"), "--tau", "abc"}).code == 1);
  CHECK(run({"compute", corpus_file("liu.sys"), "--epsilon", "-1"}).code == 1);
  CHECK(run({"compute", corpus_file("liu.sys"), "--rank-strategy", "median"}).code == 1);
  CHECK(run({}).code == 1);
  TempDir dir("errors");
  const auto bad = dir.write("bad.sys", "vars: x y\nx + z\n");
  const Run r = run({"compute", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("bad.sys:2:5") != std::string::npos);
}

TEST_CASE("report generators reduce the input to zero") {
  TempDir dir("roundtrip");
  const Run r = run({"compute", corpus_file("liu.sys"), "--no-timing"});
  REQUIRE(r.code == 0);
  const auto report_path = dir.write("liu.json", r.out);
  const Json report = Json::parse(r.out);
  const PolynomialSystem h = system_from_report(report);
  CHECK(h.size() == 5);
  CHECK(variables_from_report(report) == test::corpus("liu").variables);

  const auto liu = test::corpus("liu");
  for (const auto& g : liu.system.generators()) {
    CHECK(reduce(g, h, RankPolicy{}).remainder.norm2() <= 1e-9);
  }
  const std::string first = "y*z - z*w - x + u";
  const Run red = run({"reduce", corpus_file("liu.sys"), "--poly", first, "--report",
                       report_path.string()});
  REQUIRE(red.code == 0);
  const Json j = Json::parse(red.out);
  CHECK(j.at("member") == true);
  CHECK(j.at("basis") == "report");
  CHECK(j.at("quotients").size() == 5);
}

TEST_CASE("a constant is not a member of the Liu ideal") {
  const Run r = run({"reduce", corpus_file("liu.sys"), "--poly", "1", "--hbasis"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("member") == false);
  CHECK(j.at("remainder_norm").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("bench") {
  TempDir empty("bench-empty");
  CHECK(run({"bench", empty.path.string()}).code == 1);

  TempDir dir("bench");
  fs::copy_file(test::corpus_dir() / "x-y-trivial.sys", dir.path / "x-y-trivial.sys");
  dir.write("manifest.json", R"({"entries": [
    {"name": "trivial", "file": "x-y-trivial.sys", "epsilon": 1e-10,
     "expect": {"status": "Success", "generators": 2, "d_max": 1, "bound": 2}},
    {"name": "missing", "file": "absent.sys", "optional": true, "expect": {"status": "Success"}},
    {"name": "known failure", "file": "x-y-trivial.sys", "xfail": true,
     "expect": {"generators": 2}},
    {"name": "alternative", "file": "x-y-trivial.sys", "expect": {"generators": 3},
     "accept": [{"status": "Success"}]}
  ]})");
  const auto rows = run_bench(dir.path, false);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].verdict == "PASS");
  CHECK(rows[1].verdict == "SKIP");
  CHECK(rows[2].verdict == "XFAIL");
  CHECK(rows[3].verdict == "XFAIL");
  const Run r = run({"bench", dir.path.string(), "--output", "json", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("ok") == true);

  TempDir bad("bench-bad");
  fs::copy_file(test::corpus_dir() / "x-y-trivial.sys", bad.path / "x-y-trivial.sys");
  bad.write("manifest.json", R"({"entries": [
    {"name": "wrong", "file": "x-y-trivial.sys", "expect": {"generators": 3}}
  ]})");
  CHECK(run_bench(bad.path, false).at(0).verdict == "FAIL");
  CHECK(run({"bench", bad.path.string()}).code != 0);
}
