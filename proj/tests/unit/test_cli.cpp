#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "stabkit/cli.hpp"

using namespace stabkit;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("chamber check exit codes") {
  auto r = call({"chamber", "check", "--surface", "abelian_rho1.cfg", "--H", "1", "--B", "0", "--alpha", "1",
                 "--beta", "0"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("margin=1/1\n") != std::string::npos);

  r = call({"chamber", "check", "--surface", "abelian_rho1.cfg", "--H", "1", "--B", "0", "--alpha", "0",
            "--beta", "0"});
  CHECK(r.code == exit_negative);
  CHECK(r.out.find("blocking=boundary\n") != std::string::npos);

  r = call({"chamber", "check", "--surface", "abelian_product.cfg", "--params", "0,1;0,0;5;0"});
  CHECK(r.code == exit_negative);
  CHECK(r.out.find("blocking=ample_failure") != std::string::npos);
}

TEST_CASE("support check prints its certificate") {
  const auto r = call({"support", "check", "--surface", "abelian_rho1.cfg", "--H", "1", "--B", "0", "--alpha",
                       "1", "--beta", "0"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("delta=") != std::string::npos);
  CHECK(r.out.find("epsilon=") != std::string::npos);
  CHECK(r.out.find("minors=") != std::string::npos);
  CHECK(r.out.find("verdict=PASS") != std::string::npos);

  const auto below = call({"support", "check", "--surface", "abelian_rho1.cfg", "--params", "1;0;0;0"});
  CHECK(below.code == exit_input);
}

TEST_CASE("json mirrors the key=value output") {
  const std::vector<std::string> base{"charge", "eval", "--surface", "abelian_rho1.cfg", "--params", "1;0;1;0",
                                      "--class", "1;1;1"};
  const auto human = call(base);
  auto with_json = base;
  with_json.push_back("--json");
  const auto j = call(with_json);
  CHECK(human.code == exit_ok);
  CHECK(human.out.find("re=1/1\nim=2/1\n") != std::string::npos);
  CHECK(j.out.find("\"re\": \"1/1\"") != std::string::npos);
  CHECK(j.out.find("\"im\": \"2/1\"") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  CHECK(call({"chamber", "check", "--surface", "missing.cfg", "--params", "1;0;1;0"}).code == exit_input);
  CHECK(call({"chamber", "check", "--surface", "abelian_rho1.cfg", "--params", "1;0;1"}).code == exit_input);
  CHECK(call({"nonsense"}).code == exit_input);
  CHECK(call({"lp", "eval", "--surface", "abelian_rho1.cfg", "--H", "1,1", "--B", "0", "--x", "0"}).code ==
        exit_input);
  CHECK(call({"--help"}).code == exit_ok);
}

TEST_CASE("sweep CSV is byte identical across job counts") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "stabkit_sweep_a.csv", b = dir / "stabkit_sweep_b.csv", svg = dir / "stabkit_sweep.svg";
  const std::vector<std::string> common{"chamber", "sweep", "--surface", "abelian_rho1.cfg", "--H", "1", "--B",
                                        "0", "--range", "-2:2:1/16", "--witness-denominator", "4"};
  auto one = common, four = common;
  one.insert(one.end(), {"--csv", a.string(), "--jobs", "1", "--svg", svg.string()});
  four.insert(four.end(), {"--csv", b.string(), "--jobs", "4"});
  REQUIRE(call(one).code == exit_ok);
  REQUIRE(call(four).code == exit_ok);
  const auto csv = slurp(a);
  CHECK(csv == slurp(b));
  CHECK(csv.rfind("beta,phi,upper_bound,envelope,nef_margin\n", 0) == 0);
  CHECK(slurp(svg).find("<polyline") != std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(svg);
}

TEST_CASE("lp scan and quotient commands") {
  auto r = call({"lp", "scan", "--surface", "bielliptic3.cfg", "--H", "1,1", "--B", "0,0", "--range", "-1:1:1/4"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("1/2,1/8,1/8,0\n") != std::string::npos);
  CHECK(r.out.find("jumps=[]") != std::string::npos);

  r = call({"quotient", "verify", "beauville_quotient.cfg", "--seed", "7"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("verdicts_agreeing=100\n") != std::string::npos);

  r = call({"quotient", "induce", "bielliptic2_quotient.cfg", "--params", "2,2;0,2;1;1/2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("point_value=-2/1") != std::string::npos);
  CHECK(r.out.find("double_induction_is_G_times=true") != std::string::npos);
}
