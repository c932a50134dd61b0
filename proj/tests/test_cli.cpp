#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"

using namespace axp;
using namespace axp::testing;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/axp_cli_out.txt";
  std::string cmd = std::string(AXP_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  return r;
}

std::string bundle_arg(const std::string& flag, const std::string& file) {
  return flag + " " + bundle_path(file);
}

const std::string hawa = "A=1,G=0,J=0,H=0,S=0,B=1,C=0,D=0,P=1,M=1";
const std::string yahya = "A=1,G=1,J=0,H=0,S=0,B=0,C=0,D=0,P=1,M=1";

}  // namespace

TEST_CASE("explain reproduces the golden trace table") {
  CliResult r = run_cli(bundle_arg("explain --model", "credit_model.json") +
                        " --individual " + hawa + " --trace");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1      ?  0  0  0  0  1  0  0  1  1  T") != std::string::npos);
  CHECK(r.out.find("final  1  ?  ?  ?  ?  1  ?  0  1  ?") != std::string::npos);
  CHECK(r.out.find("explanation: {A, B, !D, P}") != std::string::npos);
}

TEST_CASE("explain under BK refuses Hawa with exit 3") {
  CliResult r = run_cli(bundle_arg("explain --model", "credit_model.json") +
                        " --individual " + hawa + " " + bundle_arg("--bk", "credit.bk"));
  CHECK(r.exit_code == 3);
}

TEST_CASE("parse errors exit with 2") {
  CliResult r = run_cli("explain --model /nonexistent.json --individual " + hawa);
  CHECK(r.exit_code == 2);
  CliResult bad = run_cli(bundle_arg("explain --model", "credit.bk") +
                          " --individual " + hawa);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("audit emits the paper verdicts for Yahya") {
  std::string args = bundle_arg("audit --model", "credit_model.json") +
                     " --individual " + yahya + " --protected G " +
                     bundle_arg("--bk", "credit.bk") + " " +
                     bundle_arg("--mapping", "credit.mapping") + " " +
                     bundle_arg("--partition", "credit.partition");
  CliResult r = run_cli(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("explicit_bias: false") != std::string::npos);
  CHECK(r.out.find("bk_aware_bias: true") != std::string::npos);
  CHECK(r.out.find("fair: true") != std::string::npos);
  CHECK(r.out.find("criterion: {A, !S, !D, P, M}") != std::string::npos);
  CHECK(r.out.find("counterpart: {A, !G, !S, !D, !M}") != std::string::npos);

  CliResult again = run_cli(args);
  CHECK(again.out == r.out);  // byte-identical body
}

TEST_CASE("mine-bk writes the BK grammar") {
  CliResult r = run_cli(bundle_arg("mine-bk --dataset", "credit_dataset.csv") +
                        " --max-arity 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "forbid !G & P & M\n");
}

TEST_CASE("find-proxies lists the purpose/marital witnesses") {
  CliResult r = run_cli(bundle_arg("find-proxies --bk", "credit.bk") +
                        " --protected G --context-arity 1 " +
                        bundle_arg("--model", "credit_model.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q=M ctx={P} q:=1 => G:=1") != std::string::npos);
  CHECK(r.out.find("q=P ctx={M} q:=1 => G:=1") != std::string::npos);
}

TEST_CASE("check-mapping accepts the bundle") {
  CliResult r = run_cli(bundle_arg("check-mapping --mapping", "credit.mapping") + " " +
                        bundle_arg("--partition", "credit.partition") + " " +
                        bundle_arg("--bk", "credit.bk") + " " +
                        bundle_arg("--model", "credit_model.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "consistent\n");
}

TEST_CASE("verify-bundle passes every golden check") {
  CliResult r = run_cli("verify-bundle --bundle " + std::string(AXP_BUNDLE_DIR));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
