#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"
#include "poincare/report.hpp"

#include <algorithm>
#include <sstream>

using namespace poincare;
using namespace poincare::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("number and range parsing") {
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("pi") == kPi);
  CHECK(parse_real("-pi/2") == -kPi / 2);
  CHECK(parse_real("3pi/4") == 3 * kPi / 4);
  CHECK(parse_real("2*pi") == 2 * kPi);
  CHECK_THROWS_AS(parse_real("abc"), ValidationError);
  CHECK_THROWS_AS(parse_real("pi/0"), ValidationError);
  const auto r = parse_range("0:pi:9");
  REQUIRE(r.size() == 9);
  CHECK(r.back() == kPi);
  CHECK(r[4] == doctest::Approx(kPi / 2));
  CHECK(parse_range("0.5") == std::vector<double>{0.5});
  CHECK_THROWS_AS(parse_range("0:1:0"), ValidationError);
  CHECK_THROWS_AS(parse_range("0:1"), ValidationError);
  CHECK(parse_vector3("1,2,pi")(2) == kPi);
  CHECK(parse_complex("1,-2") == Complex(1, -2));
  CHECK(parse_tolerance("maxwell=1e-3").second == 1e-3);
  CHECK_THROWS_AS(parse_tolerance("=1"), ValidationError);
  CHECK_THROWS_AS(parse_bool("yes"), ValidationError);
}

TEST_CASE("complex formatting") {
  CHECK(format_complex(Complex(1, 0)) == "1+0i");
  CHECK(format_complex(Complex(-0.0, -0.0)) == "0+0i");
  CHECK(format_complex(Complex(0.5, -2)) == "0.5-2i");
  CHECK(format_complex(Complex(0.1, 0)) == "0.10000000000000001+0i");
}

TEST_CASE("eval examples") {
  auto r = call({"eval", "z", "--l", "1", "--m", "0", "--n", "0", "--theta", "0", "--tau", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Z = 1+0i\n");
  CHECK(r.err.empty());

  r = call({"eval", "polarization", "--k", "0,0,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("eps_zero = (0+0i, 0+0i, 1+0i)") != std::string::npos);

  r = call({"eval", "radial", "--variant", "paper", "--l", "1", "--C", "0", "--r", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("f_zero = 2+0i") != std::string::npos);

  r = call({"eval", "z", "--l", "1", "--m", "1", "--n", "1", "--theta", "0.9", "--tau", "0.4",
            "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"]["Z"].contains("re"));
  CHECK(j["values"]["Z"].contains("im"));

  r = call({"eval", "planewave", "--k", "1,0,0", "--helicity", "1", "--format", "csv"});
  CHECK(r.out.rfind("psi_1_re,psi_1_im,psi_2_re", 0) == 0);

  r = call({"eval", "assemble", "--k", "1,2,3", "--helicity", "-1", "--l", "1", "--C", "0.5,0.1",
            "--r", "1.5", "--theta", "pi/3", "--dotted"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("psi = (", 0) == 0);
  for (const char* fn : {"m", "associated", "zonal"}) {
    r = call({"eval", fn, "--l", "2", "--theta", "1"});
    if (std::string(fn) != "zonal") {
      CHECK(r.code == kExitUsage);
    } else {
      CHECK(r.code == kExitOk);
    }
  }
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"eval", "bogus"}).code == kExitUsage);
  CHECK(call({"eval", "z", "--l", "1", "--m", "2", "--n", "0"}).code == kExitUsage);
  CHECK(call({"eval", "z", "--l", "1", "--m", "0", "--n", "0", "--theta", "4"}).code == kExitUsage);
  CHECK(call({"eval", "z", "--l", "1", "--m", "0", "--n", "0", "--k", "1,2,3"}).code == kExitUsage);
  CHECK(call({"eval", "z", "--l", "x", "--m", "0", "--n", "0"}).code == kExitUsage);
  CHECK(call({"verify", "nosuch"}).code == kExitUsage);
  CHECK(call({"verify", "radial", "--lmax", "9"}).code == kExitUsage);
  CHECK(call({"verify", "radial", "--format", "xml"}).code == kExitUsage);
  CHECK(call({"verify", "radial", "--tol", "bad"}).code == kExitUsage);
  CHECK(call({"table", "z", "--l", "1", "--m", "0", "--n", "0", "--theta", "0:1:0"}).code ==
        kExitUsage);
  const auto r = call({"eval", "bogus"});
  CHECK(r.out.empty());
  CHECK(r.err.find("unknown function") != std::string::npos);
  CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("verify exit codes") {
  auto r = call({"verify", "radial", "--lmax", "1"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["summary"]["failed"] == 0);
  r = call({"verify", "radial", "--lmax", "1", "--variant", "paper", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL (flagged)  radial.residual") != std::string::npos);
  CHECK(r.err.find("2l(l+1)") != std::string::npos);
  r = call({"verify", "casimir", "--lmax", "1", "--tol", "casimir.x2=0"});
  CHECK(r.code == kExitCheckFailed);
  r = call({"verify", "commutators", "--corrected-lambda", "false", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("suite,name,", 0) == 0);
}

TEST_CASE("tables") {
  auto r = call({"table", "z", "--l", "1", "--m", "1", "--n", "0", "--theta", "0:pi:9", "--tau", "0"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "l,m,n,theta,tau,value_re,value_im\r");
  CHECK(lines[1] == "1,1,0,0,0,0,0\r");

  // Pointwise agreement with eval.
  r = call({"table", "z", "--l", "2", "--m", "1", "--n", "-1", "--theta", "0.3:2.5:4", "--tau",
            "-0.5:0.5:3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 12);
  for (const auto& row : j["rows"]) {
    const auto e = call({"eval", "z", "--l", "2", "--m", "1", "--n", "-1", "--theta",
                         format_double(row["theta"].get<double>()), "--tau", format_double(row["tau"].get<double>()),
                         "--format", "json"});
    const auto v = nlohmann::json::parse(e.out)["values"]["Z"];
    CHECK(v["re"] == row["value"]["re"]);
    CHECK(v["im"] == row["value"]["im"]);
  }

  r = call({"table", "zonal", "--l", "0:2:5", "--theta", "0.5", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(call({"table", "polarization", "--k", "1,2,3"}).code == kExitUsage);
}
