// End-to-end checks of the undecim binary: spawns the real executable,
// captures stdout, and pins exit codes and byte-exact output contracts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// stderr is dropped unless merge_stderr; exit code is the process status.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(UNDECIM_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    res.out.append(buf, n);
  }
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify accepts the primitive solution") {
  const auto r = run_cli("verify 2 5 1 3");
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");
}

TEST_CASE("verify rejects a near miss") {
  const auto r = run_cli("verify 3 5 1 3");
  CHECK(r.code == 0);
  CHECK(r.out == "invalid\n");
}

TEST_CASE("verify --json") {
  const auto r = run_cli("verify 2662 605 4 3 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("valid") == true);
}

TEST_CASE("verify exits 1 on out-of-range input") {
  CHECK(run_cli("verify 0 5 1 3").code == 1);
  CHECK(run_cli("verify 2 5 1 2").code == 1);
}

TEST_CASE("solve text output starts with the family") {
  const auto r = run_cli("solve --lambda-max 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("2 5 1 3\n2662 605 4 3\n", 0) == 0);
  // one rendered certificate per case
  std::size_t count = 0;
  for (std::size_t pos = r.out.find("certificate:");
       pos != std::string::npos; pos = r.out.find("certificate:", pos + 1)) {
    ++count;
  }
  CHECK(count == 7);
}

TEST_CASE("solve --json carries family and certificates") {
  const auto r = run_cli("solve --lambda-max 2 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("family").size() == 3);
  const auto& f1 = j.at("family")[1];
  CHECK(f1.at("x") == "2662");
  CHECK(f1.at("y") == "605");
  CHECK(f1.at("k") == 4);
  CHECK(f1.at("n") == 3);
  CHECK(f1.at("lambda") == 1);
  REQUIRE(j.at("certificates").size() == 7);
  CHECK(j.at("certificates")[0].at("case") == "reduction");
  CHECK(j.at("certificates")[1].at("case") == "n=3");
  // JSON and text agree on the tuple bytes
  const auto text = run_cli("solve --lambda-max 2");
  const std::string line = f1.at("x").get<std::string>() + " " +
                           f1.at("y").get<std::string>() + " 4 3\n";
  CHECK(text.out.find(line) != std::string::npos);
}

TEST_CASE("solve rejects a negative lambda bound") {
  CHECK(run_cli("solve --lambda-max -1").code == 1);
}

TEST_CASE("search finds the family in a small box") {
  const auto r = run_cli("search --x-max 1000 --k-max 2 --n-max 8");
  CHECK(r.code == 0);
  CHECK(r.out == "2 5 1 3\n");

  const auto j = run_cli("search --x-max 10000 --k-max 4 --n-max 8 --jobs 4 "
                         "--json");
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed.at("solutions").size() == 2);
  CHECK(parsed.at("solutions")[1].at("x") == "2662");
}

TEST_CASE("search validates jobs") {
  CHECK(run_cli("search --x-max 10 --k-max 1 --n-max 3 --jobs 0").code == 1);
  CHECK(run_cli("search --x-max 10 --k-max 1 --n-max 3 --jobs 5000").code ==
        1);
}

TEST_CASE("pell prints the unit and orbit") {
  const auto r = run_cli("pell --d 33 --n 3 --count 3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "fundamental unit: (23, 4) norm 1\n"
        "class (6, 1): (6, 1) (270, 47) (12414, 2161)\n");
}

TEST_CASE("pell steps norm -1 units twice") {
  const auto r = run_cli("pell --d 2 --n 1 --count 3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "fundamental unit: (1, 1) norm -1\n"
        "class (1, 0): (1, 0) (3, 2) (17, 12)\n");
}

TEST_CASE("pell reports an empty conic") {
  const auto r = run_cli("pell --d 3 --n 2 --count 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("no solutions\n") != std::string::npos);
}

TEST_CASE("pell rejects square d") {
  CHECK(run_cli("pell --d 25 --n 1 --count 2").code == 1);
}

TEST_CASE("lucas term, window, zeros") {
  const auto t = run_cli("lucas --p 46 --q 1 --t0 1 --tm1 -1 --term 5");
  CHECK(t.code == 0);
  CHECK(t.out == "210044879\n");

  const auto w = run_cli("lucas --p 46 --q 1 --t0 1 --tm1 -1 --mod 11");
  CHECK(w.code == 0);
  CHECK(w.out == "period: 11\nresidues: -1 1 3 5 -4 -2 0 2 4 -5 -3\n");

  const auto z = run_cli("lucas --p 46 --q 1 --t0 1 --tm1 -1 --zeros 11");
  CHECK(z.code == 0);
  CHECK(z.out == "period: 11\nzero classes: 5\n");
}

TEST_CASE("lucas requires exactly one query") {
  CHECK(run_cli("lucas --p 46 --q 1 --t0 1 --tm1 -1").code == 1);
  CHECK(run_cli("lucas --p 46 --q 1 --t0 1 --tm1 -1 --term 5 --mod 11").code ==
        1);
}

TEST_CASE("screen congruence output contract") {
  const auto r = run_cli("screen --prime 11 --exponent 5");
  CHECK(r.code == 0);
  CHECK(r.out == "excluded: congruence contradiction\n");
  // detail goes to stderr, not stdout
  const auto merged = run_cli("screen --prime 11 --exponent 5", true);
  CHECK(merged.out.size() > r.out.size());
  CHECK(merged.out.find("primitive divisor") != std::string::npos);
}

TEST_CASE("screen congruence admissible case") {
  const auto r = run_cli("screen --prime 19 --exponent 5");
  CHECK(r.code == 0);
  CHECK(r.out == "not excluded\n");
}

TEST_CASE("screen carmichael") {
  const auto r = run_cli("screen --carmichael-d 2");
  CHECK(r.code == 0);
  CHECK(r.out == "excluded: Carmichael primitive-divisor bound\n");

  const auto j = run_cli("screen --carmichael-d 3 --json");
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("excluded") == true);
  CHECK(parsed.at("reason") == "carmichael_large_index");
  REQUIRE(parsed.at("checks").size() == 13);
  CHECK(parsed.at("checks")[3].at("value") == "26");
}

TEST_CASE("screen flag combinations") {
  CHECK(run_cli("screen --carmichael-d 2 --prime 11").code == 1);
  CHECK(run_cli("screen --prime 11").code == 1);
  CHECK(run_cli("screen").code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").code == 1);                    // no subcommand
  CHECK(run_cli("frobnicate").code == 1);          // unknown subcommand
  CHECK(run_cli("verify 2 5 1").code == 1);        // missing argument
  CHECK(run_cli("verify 2x 5 1 3").code == 1);     // malformed number
  CHECK(run_cli("solve --lambda-max 1 --bogus").code == 1);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("solve --help").code == 0);
}

}  // TEST_SUITE
