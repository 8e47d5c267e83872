// End-to-end checks that drive the installed CLI binary through popen.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fixedfield/serialize.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FIXEDFIELD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("generator command prints the F_2 golden fraction and passes") {
  const RunResult r = run_cli("--p 2 --n 1 generator");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(x^6+x^5+x^3+x+1)/(x^4+x^2)") != std::string::npos);
  CHECK(r.output.find("degree = 6") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("generator json output parses back to the exact generator") {
  const RunResult r = run_cli("--p 3 --n 1 generator --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("command") == "generator");
  CHECK(j.at("field").at("p") == 3);
  CHECK(j.at("field").at("n") == 1);
  const fixedfield::FieldPtr f3 = fixedfield::field_from_json(j.at("field"));
  const auto parsed =
      fixedfield::rational_from_json(f3, j.at("result").at("generator"));
  CHECK(parsed == fixedfield::f_k_direct(f3, 8));
  for (const auto& v : j.at("verdicts")) CHECK(v.at("pass") == true);
}

TEST_CASE("the F_4 closed form is served with char-2 terms dropped") {
  const RunResult r = run_cli("--p 2 --n 2 generator --method closed");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("x^60+x^57+x^54+x^51+x^45") != std::string::npos);
  CHECK(r.output.find("x^48+x^36+x^24+x^12") != std::string::npos);
}

TEST_CASE("group listing for F_2 is the six maps") {
  const RunResult r = run_cli("--p 2 --n 1 group");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x\nx+1\n1/x\n1/(x+1)\n(x+1)/x\nx/(x+1)\n|G| = 6\n");
}

TEST_CASE("group counts in json mode") {
  const RunResult r = run_cli("--p 3 --n 1 group --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("result").at("count") == 24);
  CHECK(j.at("result").at("maps").size() == 24);
}

TEST_CASE("fk computes and cross-checks applicable methods") {
  const RunResult golden = run_cli("--p 2 --n 1 fk --k 3");
  CHECK(golden.exit_code == 0);
  CHECK(golden.output.find("(x^6+x^5+x^3+x+1)/(x^4+x^2)") != std::string::npos);
  CHECK(golden.output.find("agree: yes") != std::string::npos);

  // q - 1 = 1 divides 2, so the factored route applies.
  const RunResult f2k2 = run_cli("--p 2 --n 1 fk --k 2 --method factored");
  CHECK(f2k2.exit_code == 0);
  CHECK(f2k2.output.find("f_2 = 1") != std::string::npos);
}

TEST_CASE("fk json round-trips the value") {
  const RunResult r = run_cli("--p 2 --n 1 fk --k 3 --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("result").at("agree") == true);
  const fixedfield::FieldPtr f2 = fixedfield::field_from_json(j.at("field"));
  CHECK(fixedfield::rational_from_json(f2, j.at("result").at("value")) ==
        fixedfield::f_k_direct(f2, 3));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("--p 4 --n 1 verify").exit_code == 2);
  CHECK(run_cli("--p 4 --n 1 verify").output.find("prime") != std::string::npos);
  CHECK(run_cli("--p 3 --n 1 fk --k 3 --method factored").exit_code == 2);
  CHECK(run_cli("--p 3 --n 1 fk --k 2 --method closed").exit_code == 2);
  CHECK(run_cli("--p 2 --n 1 fk --k 0").exit_code == 2);
  CHECK(run_cli("--p 2 --n 1").exit_code == 2);
  CHECK(run_cli("--p 2 --n 2 --modulus 1,0,1 group").exit_code == 2);
}

TEST_CASE("an explicit modulus is accepted") {
  const RunResult r = run_cli("--p 2 --n 2 --modulus 1,1,1 group --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output).at("result").at("count") == 60);
}

TEST_CASE("verify reports the known degree-claim failure and exits 1") {
  const RunResult r = run_cli("--p 2 --n 1 verify --format json");
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.output);
  CHECK(j.at("result").at("failed") == json::array({"cleared_numerator_degree"}));
  std::size_t passed = 0;
  for (const auto& v : j.at("verdicts")) {
    if (v.at("pass") == true) ++passed;
  }
  CHECK(passed == j.at("verdicts").size() - 1);
}
