#include <doctest.h>

#include <sstream>

#include "humbert/cli/cli.hpp"

using namespace humbert::cli;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("report schema and exit-code contract") {
  const std::vector<std::vector<std::string>> commands{
      {"lie", "roots"},
      {"humbert", "normal-form", "--disc", "8"},
      {"cycles", "enumerate", "--disc", "1", "--box", "1"},
      {"cycles", "report", "--disc", "4", "--level", "2", "--box", "1", "--height", "3"},
      {"cycles", "frame", "--vectors", "0,1,0,0,0;0,2,0,0,0"},
  };
  for (const auto& args : commands) {
    const Run r = run_cli(args);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"command", "inputs", "results", "checks", "version"}) CHECK(j.contains(key));
    CHECK(j["version"] == kReportVersion);
    bool all = true;
    for (const auto& c : j["checks"]) all = all && c["status"] == "pass";
    CHECK((r.code == kSuccess) == all);
    CHECK(r.code != kUsageError);
    CHECK(run_cli(args).out == r.out);
  }
}

TEST_CASE("text rendering and usage errors") {
  const Run text = run_cli({"--format", "text", "humbert", "normal-form", "--disc", "5"});
  CHECK(text.code == kSuccess);
  CHECK(text.out.find("relation: (1,1,-1,0,0)") != std::string::npos);
  CHECK(text.out.find("[PASS] primitive") != std::string::npos);
  // global flags after the subcommand
  CHECK(run_cli({"humbert", "normal-form", "--disc", "5", "--format", "text"}).out == text.out);
  CHECK(run_cli({}).code == kUsageError);
  CHECK(run_cli({"fock"}).code == kUsageError);
  CHECK(run_cli({"fock", "harmonics"}).code == kUsageError);
  CHECK(run_cli({"fock", "harmonics", "--ktype", "4x1"}).code == kUsageError);
  CHECK(run_cli({"cycles", "frame", "--vectors", "1,2,3"}).code == kUsageError);

  Report r{"x"};
  r.check("a", true);
  CHECK(r.ok());
  r.check("b", false, "why");
  CHECK_FALSE(r.ok());
  CHECK(render_text(r.to_json()).find("[FAIL] b: why") != std::string::npos);
}
