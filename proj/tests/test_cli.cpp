// Runs the stdid binary and checks output and exit codes.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(STDID_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("stdid_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("sum on G_2") {
  const std::string g2 = write_temp("g2.txt", "n 2 s 1 t 2\n1 2 1\n2 1 1\n1 1 0\n1 2 0\n2 2 0\n");
  const Run r = run("sum " + g2);
  CHECK(r.code == 0);
  CHECK(r.out == "S=4 T=4 trails=8\n");

  const Run listed = run("sum " + g2 + " --list-trails");
  CHECK(listed.out.rfind("trail=1,2,3,4,5 sgn=+1 sgn_M=+1\ntrail=1,5,2,3,4 sgn=-1 sgn_M=+1\n", 0) == 0);

  const Run first = run("sum " + g2 + " --filter 'precedes:1|4'");
  const Run second = run("sum " + g2 + " --filter 'precedes:4|1'");
  CHECK(first.out == "S=4 T=4 trails=8\nfilter=precedes:1|4 S=2\n");
  CHECK(second.out == "S=4 T=4 trails=8\nfilter=precedes:4|1 S=2\n");
}

TEST_CASE("sum on two unmarked loops") {
  const std::string loops = write_temp("loops.txt", "n 1 s 1 t 1\n1 1 0\n1 1 0\n");
  CHECK(run("sum " + loops).out == "S=0 T=0 trails=2\n");
}

TEST_CASE("gn") {
  CHECK(run("gn --n 3 --mbar 1 --compute").out ==
        "n=3 mbar=1 edges=9 trails=120 expected=4 computed=4 result=pass\n");
  CHECK(run("gn --n 4 --mbar 1 --compute").out ==
        "n=4 mbar=1 edges=13 trails=2496 expected=16 computed=16 result=pass\n");
  CHECK(run("gn --n 2 --mbar 3 --compute").out ==
        "n=2 mbar=3 edges=9 trails=2304 expected=576 computed=576 result=pass\n");
  CHECK(run("gn --n 2 --mbar 1 --emit -").out == "n 2 s 1 t 2\n1 2 1\n2 1 1\n1 1 0\n1 2 0\n2 2 0\n");

  const auto path = std::filesystem::temp_directory_path() / "stdid_cli_test_g3.txt";
  CHECK(run("gn --n 3 --mbar 2 --emit " + path.string()).code == 0);
  CHECK(run("sum " + path.string()).out == "S=64 T=64 trails=2016\n");
}

TEST_CASE("exhaustive") {
  CHECK(run("exhaustive --n 1 --k 2 --bmax 2").out ==
        "witness T=2 n=1 s=1 t=1 edges=1>1*,1>1*\n"
        "T=0 classes=2\n"
        "T=2 classes=1\n"
        "n=1 k=2 bmax=2 classes=3 skipped=0 witnesses=1 all_zero=no\n");
  const Run six = run("exhaustive --n 2 --k 6 --bmax 3");
  CHECK(six.code == 0);
  CHECK(six.out.find("witness T=") == std::string::npos);
  CHECK(six.out.find("all_zero=yes") != std::string::npos);
  const Run five = run("exhaustive --n 2 --k 5 --bmax 2 --stop-on-witness");
  CHECK(five.out.find("all_zero=no") != std::string::npos);
  CHECK(five.out.find("stopped=1") != std::string::npos);
}

TEST_CASE("transform and crosscheck") {
  const std::string g2 = write_temp("g2t.txt", "n 2 s 1 t 2\n1 2 1\n2 1 1\n1 1 0\n1 2 0\n2 2 0\n");
  CHECK(run("transform " + g2 + " --op opposite").out == "n 2 s 2 t 1\n2 1 1\n1 2 1\n1 1 0\n2 1 0\n2 2 0\n");
  const Run relabeled = run("transform " + g2 + " --op relabel --perm 1,2,4,3,5");
  CHECK(relabeled.out == "# sign_relation=-1\nn 2 s 1 t 2\n1 2 1\n2 1 1\n1 2 0\n1 1 0\n2 2 0\n");
  const std::string swapped = write_temp("g2swapped.txt", relabeled.out);
  CHECK(run("sum " + swapped).out == "S=-4 T=4 trails=8\n");
  CHECK(run("transform " + g2 + " --op surgery-in --a 4 --c 1").code == 1);
  CHECK(run("crosscheck " + g2).out == "entry=+4*v1v2 T=4 sign=+1 result=agrees\n");
}

TEST_CASE("verify is deterministic") {
  const Run a = run("verify --suite swan --seed 7");
  const Run b = run("verify --suite swan --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("suite=swan seed=7 passed=200/200 status=PASS\n") != std::string::npos);
  CHECK(run("verify --suite lower-bound").out.find("passed=12/12 status=PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("verify --suite nonsense").code == 1);
  CHECK(run("gn --n 1 --mbar 1 --compute").code == 1);
  CHECK(run("--help").code == 0);

  const std::string bad = write_temp("bad.txt", "n 2 s 1 t 2\n1 2 x\n");
  CHECK(run("sum " + bad).code == 3);
  CHECK(run("sum /nonexistent/graph.txt").code == 3);
  CHECK(run("sum " + write_temp("g2f.txt", "n 2 s 1 t 2\n1 2 1\n2 1 1\n1 1 0\n1 2 0\n2 2 0\n") +
            " --filter at:0@1").code == 3);

  CHECK(run("gn --n 3 --mbar 1 --compute --budget 10").code == 4);
  CHECK(run("verify --suite gn-formulas --budget 10").code == 4);
  CHECK(run("exhaustive --n 4 --k 12 --bmax 3").code == 4);
}
