// End-to-end checks of the fairnet binary: exit codes, file round-trips,
// and the reduce -> solve pipeline. The binary path arrives via
// FAIRNET_BIN (set by ctest); the cases skip when it is absent.

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* b = std::getenv("FAIRNET_BIN");
  return b ? b : "";
}

int run(const std::string& args) {
  int status = std::system((bin() + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / "fairnet_cli_capture.txt";
  int rc =
      std::system((bin() + " " + args + " > " + tmp.string() + " 2>&1").c_str());
  (void)rc;
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / "fairnet_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const {
    return (dir / name).string();
  }
};

}  // namespace

TEST_CASE("cli: check, solve, reduce, oracle, gen, bench") {
  if (bin().empty()) {
    MESSAGE("FAIRNET_BIN not set; skipping CLI cases");
    return;
  }
  Workspace ws;

  SUBCASE("check exit codes and pipeline") {
    std::string inst = ws.file("two.inst",
                               "agents 2\ngoods 2\nval 0 0 1\nval 1 0 1\n"
                               "edge 0 1\n");
    std::string fair = ws.file("fair.alloc", "bundle 0 0\nbundle 1 1\n");
    std::string envy = ws.file("envy.alloc", "bundle 0 0 1\n");
    CHECK(run("check --instance " + inst + " --allocation " + fair +
              " --criterion gef") == 0);
    CHECK(run("check --instance " + inst + " --allocation " + envy +
              " --criterion gef") == 1);
    CHECK(run("check --instance " + inst + " --allocation " + fair +
              " --criterion pareto") == 0);

    // malformed input: parse error with a data exit code
    std::string bad = ws.file("bad.inst", "agents 1\ngoods 1\nwat\n");
    CHECK(run("check --instance " + bad + " --allocation " + fair +
              " --criterion gef") == 65);
    CHECK(run("check --instance missing.inst --allocation " + fair +
              " --criterion gef") == 66);
    // usage error
    CHECK(run("check --instance " + inst) == 64);
  }

  SUBCASE("solve exit codes: feasible, infeasible, budget") {
    std::string hopeless = ws.file(
        "one.inst", "agents 2\ngoods 1\nval 0 0\nval 1 0\nedge 0 1\n");
    CHECK(run("solve --instance " + hopeless + " --fairness gef") == 1);
    CHECK(run("solve --instance " + hopeless + " --fairness qp") == 1);

    std::string share = ws.file(
        "two.inst", "agents 2\ngoods 2\nval 0 0 1\nval 1 0 1\nedge 0 1\n");
    std::string out = ws.path("two.alloc");
    CHECK(run("solve --instance " + share +
              " --fairness gef --emit-allocation " + out) == 0);
    CHECK(run("check --instance " + share + " --allocation " + out +
              " --criterion gef") == 0);
    CHECK(run("check --instance " + share + " --allocation " + out +
              " --criterion qp") == 0);

    std::string big = ws.file(
        "big.inst",
        "agents 4\ngoods 6\nval 0 0 1 2 3 4 5\nval 1 0 1 2 3 4 5\n"
        "val 2 0 1 2 3 4 5\nval 3 0 1 2 3 4 5\nedge 0 1\nedge 1 2\n"
        "edge 2 3\nedge 0 3\nedge 0 2\nedge 1 3\n");
    CHECK(run("solve --instance " + big + " --fairness gef --budget 1") == 2);
  }

  SUBCASE("reduce -> solve pipeline reproduces the oracle verdict") {
    std::string yes = ws.file("tri.src", "vertices 3\nedge 0 1\nedge 1 2\n"
                                         "edge 0 2\n");
    std::string no = ws.file(
        "k4.src",
        "vertices 4\nedge 0 1\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\n"
        "edge 2 3\n");
    for (auto [src, expect] : {std::pair{yes, 0}, std::pair{no, 1}}) {
      CHECK(run("oracle --problem 3col --source " + src) == expect);
      std::string out = ws.path("reduced.inst");
      std::string roles = ws.path("reduced.roles");
      CHECK(run("reduce --from 3col --source " + src + " --out " + out +
                " --roles " + roles) == 0);
      CHECK(run("solve --instance " + out +
                " --fairness lp --budget 100000000") == expect);
      CHECK(fs::exists(roles));
    }
  }

  SUBCASE("--json emits the documented fields for every command") {
    std::string share = ws.file(
        "two.inst", "agents 2\ngoods 2\nval 0 0 1\nval 1 0 1\nedge 0 1\n");
    auto out = nlohmann::json::parse(
        run_capture("solve --instance " + share + " --fairness qp --json"));
    CHECK(out["status"] == "feasible");
    CHECK(out["fairness"] == "qp");
    CHECK(out["allocation"].is_object());
    CHECK(out["unvalued_goods"].is_array());

    std::string alloc = ws.file("two.alloc", "bundle 0 0 1\n");
    auto chk = nlohmann::json::parse(
        run_capture("check --instance " + share + " --allocation " + alloc +
                    " --criterion gef --json"));
    CHECK(chk["criterion"] == "gef");
    CHECK(chk["satisfied"] == false);
    CHECK(chk["violations"].size() == 1);
    CHECK(chk["violations"][0]["agent"] == 1);

    std::string srcg = ws.file("g.src", "vertices 3\nedge 0 1\nclique 2\n");
    auto orc = nlohmann::json::parse(
        run_capture("oracle --problem clique --source " + srcg + " --json"));
    CHECK(orc["found"] == true);
    CHECK(orc["certificate"]["vertices"] == nlohmann::json::array({0, 1}));

    auto red = nlohmann::json::parse(
        run_capture("reduce --from clique-goods --source " + srcg + " --out " +
                    ws.path("r.inst") + " --json"));
    CHECK(red["trivial_no"] == false);
    CHECK(red["agents"].is_number());

    auto gen = nlohmann::json::parse(
        run_capture("gen --family path --count 2 --agents 3 --goods 2 "
                    "--seed 3 --out " + ws.path("gj") + " --json"));
    CHECK(gen["files"].size() == 2);

    auto ben = nlohmann::json::parse(
        run_capture("bench --corpus " + ws.path("gj") + " --out " +
                    ws.path("gj.csv") + " --solvers qp --json"));
    CHECK(ben["instances"] == 2);
    CHECK(ben["skipped"] == 0);
  }

  SUBCASE("qp network dump") {
    std::string share = ws.file(
        "two.inst", "agents 2\ngoods 2\nval 0 0 1\nval 1 0 1\nedge 0 1\n");
    std::string net = ws.path("net.txt");
    CHECK(run("solve --instance " + share + " --fairness qp --dump-network " +
              net) == 0);
    std::ifstream in(net);
    std::string first;
    std::getline(in, first);
    CHECK(first == "nodes 6");
  }

  SUBCASE("gen is deterministic and bench covers instance x solver") {
    std::string d1 = ws.path("c1"), d2 = ws.path("c2");
    CHECK(run("gen --family er --count 4 --agents 4 --goods 4 --seed 5 "
              "--out " + d1) == 0);
    CHECK(run("gen --family er --count 4 --agents 4 --goods 4 --seed 5 "
              "--out " + d2) == 0);
    for (const auto& e : fs::directory_iterator(d1)) {
      std::ifstream a(e.path()), b(fs::path(d2) / e.path().filename());
      std::stringstream sa, sb;
      sa << a.rdbuf();
      sb << b.rdbuf();
      CHECK(sa.str() == sb.str());
    }
    std::string csv = ws.path("bench.csv");
    CHECK(run("bench --corpus " + d1 + " --out " + csv +
              " --solvers gef,qp") == 0);
    std::ifstream in(csv);
    int lines = 0;
    std::string line;
    std::getline(in, line);
    CHECK(line == "instance,solver,verdict,nodes,elapsed_us,agents,goods,edges");
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 4 * 2);

    std::string empty_dir = ws.path("empty");
    fs::create_directories(empty_dir);
    std::string csv2 = ws.path("empty.csv");
    CHECK(run("bench --corpus " + empty_dir + " --out " + csv2) == 0);
    std::ifstream in2(csv2);
    std::getline(in2, line);
    CHECK_FALSE(line.empty());
    CHECK_FALSE(std::getline(in2, line));  // header only
  }
}
