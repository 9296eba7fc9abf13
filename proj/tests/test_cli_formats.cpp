// Exercises the CLI's machine-readable surfaces by spawning the binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "qsprob/rational.hpp"

using nlohmann::json;
using namespace qsprob;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(QSPROB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t read;
  while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), read);
  }
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("enumerate json round-trips exactly") {
  CommandResult result = run_cli("enumerate --n 3 --format json");
  REQUIRE(result.exit_code == 0);
  json out = json::parse(result.output);
  CHECK(out["command"] == "enumerate");
  CHECK(out["parameters"]["n"] == 3);
  REQUIRE(out["rows"].size() == 5);

  Rational total = 0;
  for (const json& row : out["rows"]) {
    Rational w = parse_fraction(std::string(row["weight"]["num"]) + "/" +
                                std::string(row["weight"]["den"]));
    total += w;
  }
  CHECK(total == 1);

  // Middle-splitter run: structured tree with null children, weight 1/3.
  const json& middle = out["rows"][2];
  CHECK(middle["run_text"] == "(2,_,_)");
  CHECK(middle["run"]["rank"] == 2);
  CHECK(middle["run"]["left"].is_null());
  CHECK(middle["run"]["right"].is_null());
  CHECK(middle["weight"]["num"] == "1");
  CHECK(middle["weight"]["den"] == "3");
  CHECK(middle["t"] == 2);
}

TEST_CASE("enumerate csv golden for n = 2") {
  CommandResult result = run_cli("enumerate --n 2 --format csv");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output ==
        "run,weight,t\n"
        "\"(1,_,_)\",1/2,1\n"
        "\"(2,_,_)\",1/2,1\n");
}

TEST_CASE("table output") {
  CommandResult csv = run_cli("table --n-max 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.find("n,t_exact,t_float,bound_2nlnn,runs") == 0);
  CHECK(csv.output.find("3,8/3,") != std::string::npos);

  json out = json::parse(run_cli("table --n-max 3 --format json").output);
  REQUIRE(out["rows"].size() == 4);
  CHECK(out["rows"][0]["t_exact"]["num"] == "0");
  CHECK(out["rows"][0]["runs"] == 1);
  CHECK(out["rows"][2]["t_exact"]["num"] == "1");
  CHECK(out["rows"][3]["t_exact"]["num"] == "8");
  CHECK(out["rows"][3]["t_exact"]["den"] == "3");
  CHECK(out["rows"][3]["runs"] == 5);
}

TEST_CASE("montecarlo json is reproducible and exact at n = 2") {
  std::string args = "montecarlo --n 2 --trials 10 --seed 7 --format json";
  CommandResult first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == run_cli(args).output);

  json out = json::parse(first.output);
  CHECK(out["report"]["mean"] == 1.0);
  CHECK(out["report"]["variance"] == 0.0);
  CHECK(out["report"]["z"] == 0.0);
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("verify bogus").exit_code == 2);
  CHECK(run_cli("montecarlo --n 5 --trials 0").exit_code == 2);
  CHECK(run_cli("enumerate --n 40").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("verify core-laws").exit_code == 0);
}
