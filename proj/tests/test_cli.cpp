#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/cli.hpp"

using namespace riesz;
using namespace riesz::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "riesz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = riesz_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RunConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "riesz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("riesz_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("defaults") {
  const RunConfig c = parse({"ck"});
  CHECK(c.command == Command::Ck);
  CHECK(c.params.alpha == 2.0);
  CHECK(c.params.beta == 2.0);
  CHECK(c.k_max == 100);
  CHECK(c.n_max == 10000);
  CHECK(c.precision_bits == 256);
  CHECK(!c.precision_explicit);
  CHECK(c.method == Method::BinomialZeta);
  CHECK(c.format == Format::Csv);
  CHECK(!c.output_path);
}

TEST_CASE("flags win over the config file") {
  const auto path = temp_file("config.ini");
  {
    std::ofstream f(path);
    f << "alpha=3.5\nbeta=4\nk-max=7\nmethod=mobius\n";
  }
  const RunConfig c = parse({"ck", "--config", path.string(), "--k-max", "9"});
  CHECK(c.params.alpha == 3.5);
  CHECK(c.params.beta == 4.0);
  CHECK(c.k_max == 9);
  CHECK(c.method == Method::MobiusTruncated);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({"ck", "--k-max", "3"}).code == kSuccess);
  CHECK(run({"--help"}).code == kSuccess);
  const Run v = run({"--version"});
  CHECK(v.code == kSuccess);
  CHECK(v.out == "riesz 1.0.0\n");

  CHECK(run({}).code == kUsageError);
  CHECK(run({"frobnicate"}).code == kUsageError);
  CHECK(run({"ck", "--k-max", "ten"}).code == kUsageError);
  CHECK(run({"ck", "--method", "fast"}).code == kUsageError);
  CHECK(run({"ck", "--alpha", "0.5", "--method", "mobius"}).code == kUsageError);
  CHECK(run({"zeta", "--sigma", "1"}).code == kUsageError);

  const Run unknown = run({"experiment", "no-such"});
  CHECK(unknown.code == kUsageError);
  CHECK(unknown.err.find("riesz-7half-4") != std::string::npos);
  CHECK(unknown.err.find("alpha-half-limit") != std::string::npos);

  const Run low = run({"ck", "--k-max", "300", "--precision-bits", "64"});
  CHECK(low.code == kInsufficientPrecision);
  CHECK(low.err.find("364") != std::string::npos);

  CHECK(run({"ck", "--k-max", "3", "--output", "/nonexistent-dir/x.csv"}).code == kRuntimeError);
}

TEST_CASE("CSV layout") {
  const Run r = run({"ck", "--alpha", "3.5", "--beta", "4", "--k-max", "2"});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.rfind("k,c_k\n0,8.87521027819256594055551919955e-01\n", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 4);
  const Run d = run({"ck", "--k-max", "2", "--digits", "8"});
  CHECK(d.out.find("\n0,6.0792710e-01\n") != std::string::npos);
}

TEST_CASE("JSON round trip") {
  const Run r = run({"ck", "--method", "mobius", "--n-max", "500", "--k-max", "5", "--format", "json"});
  REQUIRE(r.code == kSuccess);
  const Dataset d = read_json(r.out, 256);
  CHECK(d.name == "ck");
  CHECK(d.meta["method"] == "mobius");
  CHECK(d.meta["n_max"] == 500);
  CHECK(d.meta.contains("truncation_tail_bound"));
  CHECK(d.meta["generated_by"] == "riesz 1.0.0");
  REQUIRE(d.rows() == 6);
  std::ostringstream again;
  write_json(d, again, 30);
  CHECK(again.str() == r.out);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::vector<std::string> base{"ck", "--k-max", "40", "--alpha", "3", "--beta", "3"};
  for (const char* format : {"csv", "json"}) {
    auto a = base;
    a.insert(a.end(), {"--format", format, "--threads", "1"});
    auto b = base;
    b.insert(b.end(), {"--format", format, "--threads", "3"});
    CHECK(run(a).out == run(b).out);
    CHECK(run(a).out == run(a).out);
  }
}

TEST_CASE("file output") {
  const auto path = temp_file("out.csv");
  const Run r = run({"mobius", "--n-max", "12", "--output", path.string()});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().rfind("n,mu,mertens\n1,1,1\n2,-1,0\n", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("other commands") {
  const Run z = run({"zeta", "--sigma", "2", "--digits", "12"});
  CHECK(z.out.find("2.00000000000e+00,1.64493406685e+00") != std::string::npos);
  const Run phi = run({"phi", "--k-max", "50", "--s-re", "3"});
  CHECK(phi.code == kSuccess);
  CHECK(phi.out.rfind("K,phi_re,phi_im,term_abs\n", 0) == 0);
  const Run e = run({"experiment", "alpha-half-limit", "--format", "json"});
  CHECK(e.code == kSuccess);
  CHECK(e.out.find("c_k_limit") != std::string::npos);
}

TEST_CASE("writers reject ragged datasets") {
  Dataset d;
  d.name = "bad";
  d.columns.push_back(Column{"a", {1, 2}, {}});
  d.columns.push_back(Column{"b", {1}, {}});
  std::ostringstream os;
  CHECK_THROWS(write_csv(d, os, 10));
}

}
