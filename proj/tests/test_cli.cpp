#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagbott/json_io.hpp"
#include "flagbott/orbit.hpp"
#include "helpers.hpp"

namespace {

namespace fs = std::filesystem;
using namespace flagbott;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("flagbott_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout_" + std::to_string(counter) + ".txt");
  const fs::path err = work_dir() / ("stderr_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(FLAGBOTT_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

int count_dot_nodes(const std::string& dot) {
  int nodes = 0;
  std::istringstream ss(dot);
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind("  \"", 0) == 0 && line.find(" -- ") == std::string::npos) ++nodes;
  return nodes;
}

const char* kThreeStageFlagTower = R"({
  "type": "flag_bott",
  "n": [2, 1, 1],
  "A": {
    "2,1": [[1, 2, 0], [0, 0, 0]],
    "3,1": [[3, 4, 0], [0, 0, 0]],
    "3,2": [[5, 0], [0, 0]]
  }
})";

const char* kTwoStageGeneralized = R"({
  "type": "generalized_bott",
  "n": [2, 1],
  "a": {"2,1": [1]}
})";

const char* kThreeStageGeneralized = R"({
  "type": "generalized_bott",
  "n": [2, 1, 2],
  "a": {"2,1": [1], "3,1": [1, 1], "3,2": [1, 1]}
})";

}  // namespace

TEST_CASE("cli gkm") {
  const fs::path tower = write_file("flag3.json", kThreeStageFlagTower);

  SUBCASE("dot output has one node per fixed point") {
    const RunResult r = run_cli("gkm --tower " + tower.string());
    CHECK(r.exit_code == 0);
    CHECK(count_dot_nodes(r.out) == 24);
  }
  SUBCASE("a one-stage tower gives two nodes") {
    const fs::path tiny = write_file("tiny.json", R"({"type":"flag_bott","n":[1]})");
    const RunResult r = run_cli("gkm --tower " + tiny.string());
    CHECK(r.exit_code == 0);
    CHECK(count_dot_nodes(r.out) == 2);
  }
  SUBCASE("generalized towers pass through associate") {
    const fs::path g = write_file("gen2.json", kTwoStageGeneralized);
    const RunResult r = run_cli("gkm --tower " + g.string() + " --effective --format json");
    CHECK(r.exit_code == 0);
    const GkmGraph graph = parse_gkm_json(r.out);
    CHECK(graph.vertices.size() == 12);
    CHECK(graph.basis == Basis::effective);
  }
  SUBCASE("malformed shapes name the offending pair and exit 2") {
    const fs::path bad = write_file(
        "bad.json", R"({"type":"flag_bott","n":[2,1],"A":{"2,1":[[1,0],[0,1]]}})");
    const RunResult r = run_cli("gkm --tower " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("(2,1)") != std::string::npos);
  }
  SUBCASE("cap exceeded exits 3") {
    const RunResult r = run_cli("gkm --tower " + tower.string() + " --cap 10");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("--out writes the file instead of stdout") {
    const fs::path out = work_dir() / "graph.dot";
    const RunResult r = run_cli("gkm --tower " + tower.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(count_dot_nodes(slurp(out)) == 24);
  }
}

TEST_CASE("cli fan") {
  SUBCASE("orbit rays match the two-stage ray table") {
    const fs::path g = write_file("gen2b.json", kTwoStageGeneralized);
    const RunResult r = run_cli("fan orbit --tower " + g.string());
    CHECK(r.exit_code == 0);
    const Fan f = parse_fan_json(r.out);
    REQUIRE(f.rays.size() == 8);
    CHECK(f.max_cones.size() == 12);
    const auto ids = orbit_ray_ids({2, 1});
    const auto expected = testutil::two_stage_ray_table(1);
    for (size_t i = 0; i < ids.size(); ++i) CHECK(f.rays[i] == expected.at(ids[i]));
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("labels").size() == 8);
    CHECK(j.at("labels")[0] == "u^1_{1}");
    // u^1_{1,3}: mask {1,3} = 5, index 4
    CHECK(j.at("labels")[4] == "u^1_{1,3}");
    CHECK(f.rays[4] == testutil::vec({0, -1, 1}));
  }
  SUBCASE("permutohedral --n 2 emits the six displayed rays") {
    const RunResult r = run_cli("fan permutohedral --n 2");
    CHECK(r.exit_code == 0);
    const Fan f = parse_fan_json(r.out);
    REQUIRE(f.rays.size() == 6);
    CHECK(f.rays[0] == testutil::vec({1, 0}));    // u_{1}
    CHECK(f.rays[1] == testutil::vec({0, 1}));    // u_{2}
    CHECK(f.rays[2] == testutil::vec({1, 1}));    // u_{1,2}
    CHECK(f.rays[3] == testutil::vec({-1, -1}));  // u_{3}
    CHECK(f.rays[4] == testutil::vec({0, -1}));   // u_{1,3}
    CHECK(f.rays[5] == testutil::vec({-1, 0}));   // u_{2,3}
  }
  SUBCASE("gbt fan of the height-3 tower has 18 maximal cones") {
    const fs::path g = write_file("gen3.json", kThreeStageGeneralized);
    const RunResult r = run_cli("fan gbt --tower " + g.string());
    CHECK(r.exit_code == 0);
    CHECK(parse_fan_json(r.out).max_cones.size() == 18);
  }
  SUBCASE("byte-deterministic output") {
    const fs::path g = write_file("gen3b.json", kThreeStageGeneralized);
    const RunResult r1 = run_cli("fan orbit --tower " + g.string());
    const RunResult r2 = run_cli("fan orbit --tower " + g.string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
    const RunResult g1 = run_cli("gkm --tower " + g.string() + " --effective --format json");
    const RunResult g2 = run_cli("gkm --tower " + g.string() + " --effective --format json");
    CHECK(g1.exit_code == 0);
    CHECK(g1.out == g2.out);
  }
  SUBCASE("emit-then-parse is the identity") {
    const Fan f = orbit_fan(testutil::two_stage_generalized_tower(-2));
    const Fan back = parse_fan_json(fan_to_json(f));
    CHECK(back.dim == f.dim);
    CHECK(back.rays == f.rays);
    CHECK(back.max_cones == f.max_cones);
  }
  SUBCASE("flag tower files are rejected for fans") {
    const fs::path tower = write_file("flag3b.json", kThreeStageFlagTower);
    const RunResult r = run_cli("fan orbit --tower " + tower.string());
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli subdivide") {
  const Fan cp2 = gbt_fan(testutil::projective_space_tower(2));
  const fs::path fan_file = write_file("cp2.json", fan_to_json(cp2));

  SUBCASE("a 2-cone subdivision adds one ray and one cone") {
    const RunResult r = run_cli("subdivide --fan " + fan_file.string() + " --cone 0,1");
    CHECK(r.exit_code == 0);
    const Fan f = parse_fan_json(r.out);
    CHECK(f.rays.size() == 4);
    CHECK(f.max_cones.size() == 4);
  }
  SUBCASE("non-cone target exits 2") {
    const RunResult r = run_cli("subdivide --fan " + fan_file.string() + " --cone 0,1,2");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("bad cone syntax exits 2") {
    const RunResult r = run_cli("subdivide --fan " + fan_file.string() + " --cone 0,x");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli verify") {
  SUBCASE("blowup passes on the two-stage tower") {
    const fs::path g = write_file("gen2c.json", kTwoStageGeneralized);
    const RunResult r = run_cli("verify blowup --tower " + g.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
  SUBCASE("smooth fails on a determinant-2 fan file") {
    const fs::path f = write_file(
        "det2.json", R"({"dim":2,"rays":[[1,0],[1,2]],"max_cones":[[0,1]]})");
    const RunResult r = run_cli("verify smooth --fan " + f.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
  SUBCASE("smooth passes on the orbit fan of a tower") {
    const fs::path g = write_file("gen2d.json", kTwoStageGeneralized);
    const RunResult r = run_cli("verify smooth --tower " + g.string());
    CHECK(r.exit_code == 0);
  }
  SUBCASE("smooth without inputs exits 2") {
    CHECK(run_cli("verify smooth").exit_code == 2);
  }
  SUBCASE("rays passes on the height-3 tower") {
    const fs::path g = write_file("gen3c.json", kThreeStageGeneralized);
    const RunResult r = run_cli("verify rays --tower " + g.string());
    CHECK(r.exit_code == 0);
  }
  SUBCASE("gkm passes on the worked flag tower") {
    const fs::path tower = write_file("flag3c.json", kThreeStageFlagTower);
    const RunResult r = run_cli("verify gkm --tower " + tower.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("connection") != std::string::npos);
  }
  SUBCASE("joinstar battery") {
    const RunResult r = run_cli("verify joinstar --seed 1");
    CHECK(r.exit_code == 0);
  }
  SUBCASE("unknown subcommand exits 2") {
    CHECK(run_cli("verify nonsense").exit_code == 2);
  }
  SUBCASE("--help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
  }
}

TEST_CASE("integer entries beyond int64 round-trip as strings") {
  const std::string big = "123456789012345678901234567890";
  const fs::path g = write_file(
      "big.json",
      R"({"type":"generalized_bott","n":[1,1],"a":{"2,1":[")" + big + R"("]}})");
  const RunResult r = run_cli("fan gbt --tower " + g.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find('"' + big + '"') != std::string::npos);
  const Fan f = parse_fan_json(r.out);
  REQUIRE(f.rays.size() == 4);
  CHECK(f.rays[1] == IntVec{Int(-1), Int(big)});  // the lambda column of block 1
}
