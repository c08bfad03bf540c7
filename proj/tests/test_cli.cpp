#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "rieszlab/config.hpp"
#include "rieszlab/report.hpp"

using namespace rieszlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rieszlab_unit_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config({{"command", "riesz"}, {"N", 3}, {"sequence", {{"ratio", "7/2"}, {"length", 4}}}});
  CHECK(c.N == 3);
  CHECK(c.sequence.build().length() == 4);
  CHECK(c.threads == 1);

  CHECK(testing::error_kind_of([] { parse_config({{"command", "riesz"}, {"colour", 1}}); }) == ErrorKind::ConfigInvalid);
  CHECK(testing::error_kind_of([] { parse_config({{"command", "bogus"}}); }) == ErrorKind::ConfigInvalid);
  CHECK(testing::error_kind_of([] { parse_config({{"command", "norms"}, {"tol", 2.0}}); }) == ErrorKind::ConfigInvalid);
  CHECK(testing::error_kind_of([] { parse_config({{"command", "norms"}, {"N", "five"}}); }) == ErrorKind::ConfigInvalid);
  CHECK(testing::error_kind_of([] { parse_config({{"command", "norms"}, {"norm", "l3"}}); }) == ErrorKind::ConfigInvalid);
}

TEST_CASE("malformed config file writes nothing") {
  const auto dir = scratch("malformed");
  fs::create_directories(dir);
  const auto file = dir / "bad.json";
  std::ofstream(file) << "{\"command\": \"riesz\", ";
  CHECK(testing::error_kind_of([&] { load_config_file(file); }) == ErrorKind::ConfigInvalid);

  auto c = parse_config({{"command", "verify"}, {"target", "L0.0"}});
  c.out = dir / "out";
  std::ostringstream log;
  CHECK(testing::error_kind_of([&] { run_config(c, log); }) == ErrorKind::ConfigInvalid);
  CHECK_FALSE(fs::exists(c.out));
  fs::remove_all(dir);
}

TEST_CASE("coefficient sets") {
  CoefficientSpec s;
  CHECK(coefficient_sets(s, 3, 1).size() == 8);
  for (const auto& m : coefficient_sets(s, 3, 1)) CHECK(m(0, 0) == 1.0);
  s.kind = CoefficientKind::Random;
  s.count = 4;
  const auto a = coefficient_sets(s, 2, 9), b = coefficient_sets(s, 2, 9);
  REQUIRE(a.size() == 4);
  CHECK(a[3] == b[3]);
  CHECK(a[0].rows() == 3);
  CHECK(a[0].cols() == 3);
  CHECK(testing::error_kind_of([] { coefficient_sets({}, 13, 1); }) == ErrorKind::TooLarge);
}

TEST_CASE("reruns are byte-identical") {
  const auto one = scratch("det1"), two = scratch("det2");
  auto c = parse_config({{"command", "norms"}, {"N", 3}, {"p_list", {1.5, 2.0}}});
  std::ostringstream log;
  c.out = one;
  CHECK(run_config(c, log) == 0);
  c.out = two;
  c.threads = 3;
  CHECK(run_config(c, log) == 0);
  for (const char* f : {"results.jsonl", "summary.csv", "moments.csv"}) {
    CHECK(fs::exists(one / f));
    CHECK(slurp(one / f) == slurp(two / f));
  }
  fs::remove_all(one);
  fs::remove_all(two);
}

TEST_CASE("report output") {
  const auto dir = scratch("report");
  fs::create_directories(dir);
  CHECK(testing::error_kind_of([&] { emit_report({}, ReportFormat::Csv, dir / "x.csv"); }) == ErrorKind::InvalidArgument);
  CHECK_FALSE(fs::exists(dir / "x.csv"));

  CheckResult r{.statement_id = "X", .instance = "{}", .lhs = 0.375, .rhs = 0.5};
  r.exact_lhs = Dyadic(3).ldexp(-3);
  r.exact_rhs = Dyadic(1).ldexp(-1);
  settle(r);
  emit_report({r}, ReportFormat::Csv, dir / "s.csv");
  const std::string text = slurp(dir / "s.csv");
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("statement_id,instance_hash,lhs,rhs,margin,pass,method,seed\n") == 0);
  CHECK(text.find(",3/2^3,1/2^1,") != std::string::npos);
  CHECK(format_double(1.0 / 0.0) == "inf");
  fs::remove_all(dir);
}
