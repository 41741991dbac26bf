#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fuzzn/fuzzy_number.hpp"
#include "fuzzn/io.hpp"

namespace {

#ifndef FUZZNUM_CLI_PATH
#error "FUZZNUM_CLI_PATH must be defined by the build"
#endif

const char* kCli = FUZZNUM_CLI_PATH;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(kCli) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/fuzzn_cli_") + name;
}

std::string write_tri(const std::string& name) {
  std::string path = temp_path(name);
  std::ofstream out(path);
  out << fuzzn::io::serialize_fuzzy(fuzzn::FuzzyNumber::triangular(0, 1, 2));
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("cli validate accepts a valid file") {
  std::string path = write_tri("tri.json");
  RunResult r = run("validate " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("valid") != std::string::npos);
}

TEST_CASE("cli validate rejects a broken file") {
  std::string path = temp_path("broken.json");
  { std::ofstream(path) << "{\"fuzzy_number\": 42}"; }
  RunResult r = run("validate " + path);
  CHECK(r.status == 1);
  RunResult missing = run("validate /tmp/fuzzn_cli_does_not_exist.json");
  CHECK(missing.status == 1);
}

TEST_CASE("cli cut prints the endpoints") {
  std::string path = write_tri("tri.json");
  RunResult r = run("cut " + path + " --alpha 0.5");
  CHECK(r.status == 0);
  CHECK(r.out == "0.5 1.5\n");
}

TEST_CASE("cli add writes a loadable sum") {
  std::string path = write_tri("tri.json");
  std::string out = temp_path("sum.json");
  RunResult r = run("add " + path + " " + path + " --out " + out);
  CHECK(r.status == 0);
  fuzzn::FuzzyNumber s = fuzzn::io::load_fuzzy(out);
  CHECK(s.support_lo() == doctest::Approx(0.0));
  CHECK(s.support_hi() == doctest::Approx(4.0));
  CHECK(s.core_lo() == doctest::Approx(2.0));
}

TEST_CASE("cli analyze emits the csv header") {
  std::string path = write_tri("tri.json");
  RunResult r = run("analyze " + path);
  CHECK(r.status == 0);
  CHECK(r.out.rfind("x,side,kind,level", 0) == 0);
}

TEST_CASE("cli converge is deterministic across reruns") {
  std::string path = write_tri("tri.json");
  std::string out1 = temp_path("conv1.csv");
  std::string out2 = temp_path("conv2.csv");
  RunResult r1 = run("converge " + path + " --schedule 0.5,0.25 --out " + out1);
  RunResult r2 = run("converge " + path + " --schedule 0.5,0.25 --out " + out2);
  CHECK(r1.status == 0);
  CHECK(r2.status == 0);
  std::string body = read_file(out1);
  CHECK(body == read_file(out2));
  CHECK(body.rfind("p,d_inf,diff_ok", 0) == 0);
  CHECK(body.find("\n0.5,") != std::string::npos);
}

TEST_CASE("cli converge accepts a geometric schedule") {
  std::string path = write_tri("tri.json");
  RunResult r = run("converge " + path + " --schedule geometric:0.5,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("0.125") != std::string::npos);
}

TEST_CASE("cli smooth succeeds on the triangular number") {
  std::string path = write_tri("tri.json");
  std::string out = temp_path("smoothed.json");
  RunResult r = run("smooth " + path + " --p 0.5 --out " + out);
  CHECK(r.status == 0);
  fuzzn::FuzzyNumber s = fuzzn::io::load_fuzzy(out);
  CHECK(s.support_lo() == doctest::Approx(-0.5));
  CHECK(s.support_hi() == doctest::Approx(2.5));
}

TEST_CASE("cli sample and oracle run on files") {
  std::string path = write_tri("tri.json");
  RunResult s = run("sample " + path + " --step 0.5");
  CHECK(s.status == 0);
  CHECK(s.out.rfind("x,value", 0) == 0);
  RunResult o = run("oracle " + path + " " + path + " --step 0.01");
  CHECK(o.status == 0);
  CHECK(std::stod(o.out) <= 0.1);
}
