#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int status;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SCHURTENSOR_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("lr subcommand") {
  const auto r = run_cli("lr --outer 3,2,1 --inner 2,1 --content 2,1 -n 3");
  CHECK(r.status == 0);
  CHECK(r.output == "2\n");
  CHECK(run_cli("lr --outer 3,2,1 --inner 2,1 --content 2,1 -n 3 --reverse").output == "2\n");
  const auto j = run_cli("lr --outer 3,2,1 --inner 2,1 --content 2,1 -n 3 --json");
  CHECK(nlohmann::json::parse(j.output)["coefficient"] == 2);
}

TEST_CASE("cut subcommand") {
  const auto r = run_cli("cut --lambda 4,3,2,1,1,0 --mu 5,4,3,2,0,0 -s 2 -n 6");
  CHECK(r.status == 0);
  CHECK(r.output == "9,7,3,3,2,1\n");
  const auto w = run_cli("cut --lambda 4,3,2,1,1,0 --mu 5,4,3,2,0,0 -s 2 -n 6 --witness --json");
  const auto doc = nlohmann::json::parse(w.output);
  CHECK(doc["cut"] == nlohmann::json({9, 7, 3, 3, 2, 1}));
  CHECK(doc["witness_valid"] == true);
  CHECK(doc["witness"]["outer"] == nlohmann::json({9, 7, 3, 3, 2, 1}));
}

TEST_CASE("poset subcommand") {
  const auto r = run_cli("poset --lambda 2,1 --mu 2,1 -s 0 -n 3");
  CHECK(r.status == 0);
  CHECK(r.output == "* 2,2,2\n  3,2,1\n  3,3,0\n  4,1,1\n  4,2,0\n");
  const auto j = run_cli("poset --lambda 2,1 --mu 2,1 -s 0 -n 3 --json");
  const auto doc = nlohmann::json::parse(j.output);
  CHECK(doc["minimum"] == nlohmann::json({2, 2, 2}));
  CHECK(doc["members"].size() == 5);
}

TEST_CASE("expand subcommand") {
  const auto r = run_cli("expand --mu 2,1 --nu 2,1 -n 3");
  CHECK(r.status == 0);
  CHECK(r.output == "4,2,0: 1\n4,1,1: 1\n3,3,0: 1\n3,2,1: 2\n2,2,2: 1\n");
  const auto j = run_cli("expand --mu 2,1 --nu 2,1 -n 3 --json");
  const auto doc = nlohmann::json::parse(j.output);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 5);
  CHECK(doc[3]["partition"] == nlohmann::json({3, 2, 1}));
  CHECK(doc[3]["coeff"] == 2);
}

TEST_CASE("tensor-equal subcommand") {
  const auto yes =
      run_cli("tensor-equal --lambda 5,3,2 --mu 2,2,0 --nu 4,2,1 --rho 3,3,1 -n 3 --brute-force");
  CHECK(yes.status == 0);
  CHECK(yes.output == "yes\noracle: yes\nagree: yes\n");
  const auto no = run_cli("tensor-equal --lambda 3,1,0 --mu 1,1,0 --nu 2,2,0 --rho 2,0,0 -n 3");
  CHECK(no.status == 0);
  CHECK(no.output == "no\n");
}

TEST_CASE("tensor-solve subcommand") {
  const auto r = run_cli("tensor-solve --lambda 5,3,2 --mu 2,2,0 -n 3");
  CHECK(r.status == 0);
  CHECK(r.output == "4,2,1 | 3,3,1\n4,4,2 | 3,1,0\n5,3,2 | 2,2,0\n");
}

TEST_CASE("snn subcommand") {
  const auto r =
      run_cli("snn --lambda 3,1,0 --mu 1,1,0 --nu 2,2,0 --rho 2,0,0 -n 3 --json --brute-force");
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["forward"]["certificate"]["s"] == 0);
  CHECK(doc["forward"]["certificate"]["witness"] == nlohmann::json({2, 2, 2}));
  CHECK(doc["forward"]["certificate"]["case"] == "minimality");
  CHECK(doc["reverse"]["certificate"]["s"] == 1);
  CHECK(doc["reverse"]["certificate"]["witness"] == nlohmann::json({4, 1, 1}));
  CHECK(doc["forward"]["schur_nonnegative"] == false);
  CHECK(doc["reverse"]["schur_nonnegative"] == false);

  const auto text = run_cli("snn --lambda 3,1,0 --mu 1,1,0 --nu 2,2,0 --rho 2,0,0 -n 3");
  CHECK(text.output.find("lambda*mu - nu*rho: certificate s=0") != std::string::npos);
  CHECK(text.output.find("nu*rho - lambda*mu: certificate s=1") != std::string::npos);

  const auto zero = run_cli("snn --lambda 2,1 --mu 1 --nu 2,1 --rho 1 -n 3");
  CHECK(zero.output ==
        "lambda*mu - nu*rho: inconclusive\nnu*rho - lambda*mu: inconclusive\n");

  const auto all = run_cli(
      "snn --lambda 3,1,0 --mu 1,1,0 --nu 2,2,0 --rho 2,0,0 -n 3 --all --json");
  const auto all_doc = nlohmann::json::parse(all.output);
  REQUIRE(all_doc["forward"]["certificates"].is_array());
  CHECK(all_doc["forward"]["certificates"][0]["s"] == 0);
}

TEST_CASE("text and json encode the same data") {
  const auto text = run_cli("cut --lambda 3,1 --mu 1,1 -s 0 -n 3");
  const auto j = nlohmann::json::parse(run_cli("cut --lambda 3,1 --mu 1,1 -s 0 -n 3 --json").output);
  CHECK(text.output == "3,2,1\n");
  CHECK(j["cut"] == nlohmann::json({3, 2, 1}));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("lr --outer 2,3 --content 1 -n 3").status == 1);    // not weakly decreasing
  CHECK(run_cli("lr --outer 1,x --content 1 -n 3").status == 1);    // parse error
  CHECK(run_cli("cut --lambda 2,1 --mu 1 -s 5 -n 3").status == 1);  // s out of range
  CHECK(run_cli("snn --lambda 2,1 --mu 0 --nu 1 --rho 1 -n 3").status == 1);  // degree mismatch
  CHECK(run_cli("frobnicate").status == 2);                         // unknown subcommand
  CHECK(run_cli("lr --outer 1").status == 2);                       // missing required options
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("selfcheck passes at defaults") {
  const auto r = run_cli("selfcheck");
  CHECK(r.status == 0);
  CHECK(r.output.find("selfcheck: PASS") != std::string::npos);
  CHECK(r.output.find("failed=0") != std::string::npos);
}
