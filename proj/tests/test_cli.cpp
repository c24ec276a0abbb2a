#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string out_file = "/tmp/cyclotile_cli_out.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(CYCLOTILE_BIN) + " " +
                    args + " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("polytope commands") {
  RunResult r = run("polytope cyclo --n 3 --fvector");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[6,6,1]\n");
  CHECK(run("polytope assoc --n 3 --fvector").out == "[2,1]\n");
  CHECK(run("polytope cyclo --n 4 --hvector").out == "[1,9,9,1]\n");
  CHECK(run("polytope assoc --n 4 --hvector").out == "[1,3,1]\n");
}

TEST_CASE("tubing command") {
  CHECK(run("tubing path --n 3 --fvector").out == "[5,5,1]\n");
  CHECK(run("tubing cycle --n 4 --fvector").out == "[20,30,12,1]\n");
}

TEST_CASE("moduli stats") {
  RunResult z2 = run("moduli z --n 2 --stats");
  CHECK(z2.exit_code == 0);
  CHECK(z2.out.find("cells [1,1]") != std::string::npos);
  CHECK(z2.out.find("chi=0") != std::string::npos);
  CHECK(z2.out.find("circle") != std::string::npos);

  RunResult z3 = run("moduli z --n 3 --stats");
  CHECK(z3.out.find("cells [3,6,2]") != std::string::npos);
  CHECK(z3.out.find("chi=-1") != std::string::npos);
  CHECK(z3.out.find("non-orientable crosscaps=3") != std::string::npos);

  RunResult m5 = run("moduli m0 --n 5 --stats");
  CHECK(m5.out.find("cells [15,30,12]") != std::string::npos);
  CHECK(m5.out.find("chi=-3") != std::string::npos);

  RunResult cover = run("moduli cover --n 3 --stats");
  CHECK(cover.out.find("cells [12,24,8]") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("polytope assoc --n 1 --fvector").exit_code == 2);  // bad argument
  CHECK(run("nonsense").exit_code == 2);                        // bad subcommand
  CHECK(run("moduli z --n 9 --stats").exit_code == 3);          // over the cap
  CHECK(run("moduli z --n 6 --cap-z 6 --stats").exit_code == 0);
  CHECK(run("moduli z --n 3 --stats", "CYCLOTILE_CAP_Z=2").exit_code == 3);
  CHECK(run("nc --n 6 --type b").exit_code == 3);
}

TEST_CASE("nc command") {
  CHECK(run("nc --n 4").out == "{\"counts\":[1,6,6,1],\"n\":4,\"type\":\"a\"}\n");
  CHECK(run("nc --n 2 --type b").out == "{\"counts\":[1,4,1],\"n\":2,\"type\":\"b\"}\n");
}

TEST_CASE("verify command") {
  RunResult none = run("verify --suite none");
  CHECK(none.exit_code == 0);
  CHECK(none.out.find("\"entries\": []") != std::string::npos);

  RunResult nc = run("verify --suite nc --max-n 3");
  CHECK(nc.exit_code == 0);
  CHECK(nc.out.find("identity-A") != std::string::npos);
  CHECK(nc.out.find("identity-B") != std::string::npos);

  RunResult arr = run("verify --suite arrangement");
  CHECK(arr.exit_code == 0);
  CHECK(arr.out.find("\"overall\": \"pass\"") != std::string::npos);
}

TEST_CASE("exports are byte-stable") {
  std::string a = run("polytope cyclo --n 3 --export json").out;
  std::string b = run("polytope cyclo --n 3 --export json").out;
  CHECK(a == b);
  CHECK(a.find("\"ranks\"") != std::string::npos);
  std::string dot = run("moduli z --n 3 --export dot").out;
  CHECK(dot.find("graph tiles") != std::string::npos);
}
