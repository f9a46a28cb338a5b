// SPDX-License-Identifier: Apache-2.0
#include "octaq/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace octaq;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify emits JSON with the case label") {
  Result r = run({"classify", "--coeffs", "0,1,-1,0.25"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case_label"] == "double_sphere_multiplicity_two");
  CHECK(j["coefficients"]["D"] == "1/4");
}

TEST_CASE("classify output is byte stable") {
  Result a = run({"classify", "--coeffs", "1,1,-1,0.195"});
  Result b = run({"classify", "--coeffs", "1,1,-1,39/200"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Result t = run({"classify", "--coeffs", "1,1,-1,0.195", "--format", "text"});
  CHECK(t.out.find("case_label: double_surface_eight_holes") != std::string::npos);
}

TEST_CASE("invalid coefficients exit with 2") {
  CHECK(run({"classify", "--coeffs", "0,0,1,1"}).code == cli::kInvalidCoefficients);
  CHECK(run({"classify", "--coeffs", "1,2,3"}).code == cli::kInvalidCoefficients);
  CHECK(run({"classify", "--coeffs", "1,x,3,4"}).code == cli::kInvalidCoefficients);
  Result r = run({"classify", "--coeffs", "1,1/0,3,4"});
  CHECK(r.code == cli::kInvalidCoefficients);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"classify"}).code == cli::kUsage);
  CHECK(run({"classify", "--coeffs", "1,0,0,1", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"verify", "--coeffs", "1,0,-1,1", "--resolution", "8"}).code == cli::kUsage);
  CHECK(run({"sweep", "--family", "eps"}).code == cli::kUsage);
  CHECK(run({"group"}).code == cli::kUsage);
}

TEST_CASE("verify exits 0 on agreement") {
  Result r = run({"verify", "--coeffs", "1,0,-1,0.5", "--resolution", "64"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agreement"] == "agree");
}

TEST_CASE("the resolution environment variable is overridden by the flag") {
  ::setenv("OCTAQ_RESOLUTION", "32", 1);
  Result env = run({"verify", "--coeffs", "0,1,0,-1"});
  Result flag = run({"verify", "--coeffs", "0,1,0,-1", "--resolution", "48"});
  ::setenv("OCTAQ_RESOLUTION", "abc", 1);
  Result bad = run({"verify", "--coeffs", "0,1,0,-1"});
  ::unsetenv("OCTAQ_RESOLUTION");
  CHECK(nlohmann::json::parse(env.out)["resolution"] == 32);
  CHECK(nlohmann::json::parse(flag.out)["resolution"] == 48);
  CHECK(bad.code == cli::kUsage);
}

TEST_CASE("sweep writes CSV with a fixed header") {
  Result r = run({"sweep", "--family", "eps", "--eps1", "1", "--eps2", "-1", "--beta", "1",
                  "--k-range", "0:1:1/5"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string header, line;
  std::getline(in, header);
  CHECK(header.rfind("family,eps1,eps2,beta,", 0) == 0);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 6);
  CHECK(r.out.find("kummer_like_12_conic_points") != std::string::npos);

  Result d = run({"sweep", "--family", "a0", "--c", "-1", "--d-range", "-1:1/2:1/8"});
  CHECK(d.code == 0);
  CHECK(d.out.find("two_nested_spheres") != std::string::npos);
}

TEST_CASE("mesh writes OBJ and group dumps 48 matrices") {
  auto path = std::filesystem::temp_directory_path() / "octaq_test_sphere.obj";
  Result m = run({"mesh", "--coeffs", "0,1,0,-1", "--resolution", "16", "--out", path.string()});
  CHECK(m.code == 0);
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  CHECK(first.rfind("v ", 0) == 0);
  std::filesystem::remove(path);

  Result g = run({"group", "--dump"});
  CHECK(g.code == 0);
  auto j = nlohmann::json::parse(g.out);
  CHECK(j["order"] == 48);
  CHECK(j["elements"].size() == 48);
}

TEST_CASE("the installed binary returns the documented exit codes") {
  std::string bin = OCTAQ_CLI_PATH;
  CHECK(WEXITSTATUS(std::system((bin + " classify --coeffs 0,0,1,1 >/dev/null 2>&1").c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((bin + " classify --coeffs=-1,0,0,1 >/dev/null 2>&1").c_str())) == 0);
  CHECK(WEXITSTATUS(std::system((bin + " >/dev/null 2>&1").c_str())) == 1);
}
