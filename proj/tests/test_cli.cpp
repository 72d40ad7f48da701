#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cubictour/generate.hpp"
#include "cubictour/io.hpp"

using namespace cubictour;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = "cli_test_out.txt";
  std::string cmd = std::string(CUBICTOUR_CLI_PATH) + " " + args + " > " +
                    out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(out_path.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, buf.str()};
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("solve --gen petersen prints the bound line and passes") {
  RunResult r = run_cli("solve --gen petersen");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n=10") != std::string::npos);
  CHECK(r.output.find("bound=11") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("oracle --gen k4 reports opt=4") {
  RunResult r = run_cli("oracle --gen k4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("opt=4") != std::string::npos);
}

TEST_CASE("verify accepts a fresh solution and rejects a tampered one") {
  write_text("cli_graph.txt", emit_edge_list(named_graph("petersen")));
  RunResult solved = run_cli("solve cli_graph.txt --json cli_solution.json");
  REQUIRE(solved.exit_code == 0);

  RunResult ok = run_cli("verify cli_graph.txt cli_solution.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"valid\": true") != std::string::npos);

  // remove one edge triple from the solution: parity breaks
  std::ifstream in("cli_solution.json");
  std::ostringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  auto pos = text.find("],");  // first edge triple ends here
  REQUIRE(pos != std::string::npos);
  auto open = text.rfind('[', pos);
  text.erase(open, pos - open + 2);
  write_text("cli_solution.json", text);

  RunResult bad = run_cli("verify cli_graph.txt cli_solution.json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("\"all_even\": false") != std::string::npos);

  std::remove("cli_graph.txt");
  std::remove("cli_solution.json");
}

TEST_CASE("invalid input exits with code 2") {
  write_text("cli_bad.txt", "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  RunResult r = run_cli("solve cli_bad.txt");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error") != std::string::npos);
  std::remove("cli_bad.txt");

  RunResult r2 = run_cli("solve --gen random:n=7,seed=1");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("solve --json twice is byte-identical") {
  RunResult a = run_cli("solve --gen random:n=30,seed=5 --json -");
  RunResult b = run_cli("solve --gen random:n=30,seed=5 --json -");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("bench emits one row per instance") {
  RunResult r = run_cli("bench --sizes 10,12 --seeds 1..2 --csv -");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  int rows = 0;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    if (line.rfind("n,seed,", 0) == 0) {
      header_seen = true;
      continue;
    }
    if (!line.empty() && header_seen) ++rows;
  }
  CHECK(header_seen);
  CHECK(rows == 4);
}

TEST_CASE("dot export lands in the file") {
  RunResult r = run_cli("solve --gen prism --dot cli_out.dot");
  CHECK(r.exit_code == 0);
  std::ifstream in("cli_out.dot");
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("graph solution {") != std::string::npos);
  std::remove("cli_out.dot");
}
