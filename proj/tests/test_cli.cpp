#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// runs the tool through the shell; env_prefix may set variables (sh syntax)
RunResult run(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto out_path = dir / ("dpm_out_" + tag);
  const auto err_path = dir / ("dpm_err_" + tag);
  std::string cmd = env_prefix;
  if (!cmd.empty()) cmd += ' ';
  cmd += '"';
  cmd += DPM_CLI_PATH;
  cmd += "\" ";
  cmd += args;
  cmd += " > \"" + out_path.string() + "\" 2> \"" + err_path.string() + "\"";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

json parse_error(const RunResult& r) {
  const json doc = json::parse(r.err);
  REQUIRE(doc.contains("error"));
  CHECK(doc["schema_version"] == "1");
  return doc["error"];
}

int count_lines(const std::string& s, const std::string& prefix) {
  int n = 0;
  std::istringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("analyze reports ranks and mobility") {
  const RunResult r = run("analyze --polyhedron tetrahedron --phi-deg 30 --method original");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "analyze");
  CHECK(doc["arguments"]["polyhedron"] == "tetrahedron");
  CHECK(doc["arguments"]["method"] == "original");
  CHECK(doc["arguments"]["tol"] == 1e-9);
  CHECK(doc["counts"]["sarrus_units"] == 6);
  CHECK(doc["counts"]["links"] == 28);
  CHECK(doc["counts"]["joints"] == 36);
  CHECK(doc["counts"]["loops"] == 9);
  CHECK(doc["matrix"]["rows"] == 54);
  CHECK(doc["matrix"]["cols"] == 36);
  CHECK(doc["rank"] == 35);
  CHECK(doc["mobility"] == 1);
  REQUIRE(doc["motion_mode"].size() == 36);
  CHECK(doc["motion_mode"][0].get<double>() > 0.0);

  const RunResult eq = run("analyze --polyhedron dodecahedron --phi-deg 30 --method equivalent");
  REQUIRE(eq.code == 0);
  const json ed = json::parse(eq.out);
  CHECK(ed["matrix"]["rows"] == 114);
  CHECK(ed["matrix"]["cols"] == 30);
  CHECK(ed["rank"] == 29);
  CHECK(ed["mobility"] == 1);
  CHECK(ed["notes"].size() >= 2);
}

TEST_CASE("analyze succeeds at a singular endpoint") {
  // fully folded: mobility is computed and reported even though it is not 1
  const RunResult r = run("analyze --polyhedron tetrahedron --phi-deg 0");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["mobility"].get<int>() != 1);
  CHECK_FALSE(doc.contains("motion_mode"));
}

TEST_CASE("invalid arguments exit 2 with machine-readable errors") {
  for (const char* args : {
           "analyze --polyhedron icosahedron",
           "analyze --polyhedron tetrahedron --phi-deg 95",
           "analyze --polyhedron tetrahedron --method hybrid",
           "analyze --polyhedron tetrahedron --format csv",
           "analyze --polyhedron tetrahedron --tol -1",
           "analyze",
           "analyze --polyhedron tetrahedron --bogus-flag 3",
           "curves --samples 1",
           "sweep --polyhedron tetrahedron --from-deg 50 --to-deg 40",
           "nonsense-command",
       }) {
    CAPTURE(args);
    const RunResult r = run(args);
    CHECK(r.code == 2);
    CHECK(parse_error(r)["type"] == "invalid_argument");
  }
}

TEST_CASE("catalog-only kinds fail with a distinct error") {
  const RunResult r = run("analyze --polyhedron truncated-cube");
  CHECK(r.code == 1);
  const json err = parse_error(r);
  CHECK(err["type"] == "computation_error");
  CHECK(err["message"].get<std::string>().find("not constructible") != std::string::npos);
}

TEST_CASE("tolerance resolution order") {
  // environment variable overrides the default
  const RunResult env = run("analyze --polyhedron tetrahedron", "DPM_TOL=1e-6");
  REQUIRE(env.code == 0);
  CHECK(json::parse(env.out)["arguments"]["tol"] == 1e-6);
  // explicit flag beats the environment
  const RunResult flag = run("analyze --polyhedron tetrahedron --tol 1e-12", "DPM_TOL=1e-6");
  REQUIRE(flag.code == 0);
  CHECK(json::parse(flag.out)["arguments"]["tol"] == 1e-12);
  // garbage environment value is rejected
  const RunResult bad = run("analyze --polyhedron tetrahedron", "DPM_TOL=abc");
  CHECK(bad.code == 2);
  CHECK(parse_error(bad)["type"] == "invalid_argument");
}

TEST_CASE("curves emits the deployment table") {
  const RunResult r = run("curves");
  REQUIRE(r.code == 0);
  std::istringstream ss(r.out);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "phi_deg,r,R,V");
  std::vector<std::string> rows;
  while (std::getline(ss, line)) rows.push_back(line);
  REQUIRE(rows.size() == 91);
  CHECK(rows.front() == "0,0.204124145232,0.612372435696,0.117851130198");
  CHECK(rows.back() == "90,0.816496580928,1,2.35702260396");

  const RunResult two = run("curves --samples 2");
  REQUIRE(two.code == 0);
  CHECK(two.out ==
        "phi_deg,r,R,V\n"
        "0,0.204124145232,0.612372435696,0.117851130198\n"
        "90,0.816496580928,1,2.35702260396\n");

  const RunResult js = run("curves --samples 3 --format json");
  REQUIRE(js.code == 0);
  const json doc = json::parse(js.out);
  CHECK(doc["command"] == "curves");
  REQUIRE(doc["samples"].size() == 3);
  CHECK(doc["samples"][1]["phi_deg"] == 45.0);
  CHECK_FALSE(doc["notes"].empty());
}

TEST_CASE("mesh OBJ output and round trip") {
  const RunResult obj = run("mesh --polyhedron cube --phi-deg 90");
  REQUIRE(obj.code == 0);
  CHECK(count_lines(obj.out, "g platform") == 1);
  CHECK(count_lines(obj.out, "g limb") == 1);
  CHECK(count_lines(obj.out, "g newface") == 1);

  const RunResult js = run("mesh --polyhedron cube --phi-deg 90 --format json");
  REQUIRE(js.code == 0);
  const json doc = json::parse(js.out);
  CHECK(doc["counts"]["vertices"] == 24);
  CHECK(doc["counts"]["faces"] == 26);
  CHECK(doc["counts"]["platform"] == 6);
  CHECK(doc["counts"]["limb"] == 12);
  CHECK(doc["counts"]["newface"] == 8);
  CHECK(doc["watertight"] == true);

  // the OBJ carries exactly the same geometry
  CHECK(count_lines(obj.out, "v ") == 24);
  CHECK(count_lines(obj.out, "f ") == 26);

  // folded flat: single platform group, plain solid
  const RunResult flat = run("mesh --polyhedron tetrahedron --phi-deg 0");
  REQUIRE(flat.code == 0);
  CHECK(count_lines(flat.out, "v ") == 4);
  CHECK(count_lines(flat.out, "f ") == 4);
  CHECK(count_lines(flat.out, "g platform") == 1);
  CHECK(count_lines(flat.out, "g limb") == 0);
  CHECK(count_lines(flat.out, "g newface") == 0);
}

TEST_CASE("table lists the full catalog") {
  const RunResult r = run("table");
  REQUIRE(r.code == 0);
  std::istringstream ss(r.out);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "group,polyhedron,N,n_sarrus,n_link,n_joint,beta,gamma_max,notes");
  std::vector<std::string> rows;
  while (std::getline(ss, line)) rows.push_back(line);
  CHECK(rows.size() == 18);  // 3 platonic + 7 archimedean + prisms N=3..10
  CHECK(rows[0].rfind("platonic,tetrahedron,,6,28,36,\"35.26_(3,3)\",70.53", 0) == 0);
  bool has_prism5 = false;
  for (const std::string& row : rows) {
    if (row.rfind("prism,prism5,5,15,67,90,", 0) == 0) has_prism5 = true;
  }
  CHECK(has_prism5);

  const RunResult js = run("table --format json");
  REQUIRE(js.code == 0);
  const json doc = json::parse(js.out);
  REQUIRE(doc["rows"].size() == 18);
  CHECK(doc["rows"][2]["polyhedron"] == "dodecahedron");
  CHECK(doc["rows"][2]["gamma_max_deg"] == 139.18);
  bool flagged = false;
  for (const auto& note : doc["rows"][2]["notes"]) {
    if (note.get<std::string>().find("138.19") != std::string::npos) flagged = true;
  }
  CHECK(flagged);
}

TEST_CASE("sweep and sync verdicts") {
  const RunResult sw = run(
      "sweep --polyhedron tetrahedron --method original --from-deg 10 --to-deg 70 --steps 13");
  REQUIRE(sw.code == 0);
  const json sd = json::parse(sw.out);
  CHECK(sd["generic_rank"] == 35);
  CHECK(sd["pass"] == true);
  CHECK(sd["samples"].size() == 13);
  CHECK(sd["deviations_phi_deg"].empty());

  // endpoints recorded but excluded from the verdict
  const RunResult full = run(
      "sweep --polyhedron tetrahedron --method equivalent --from-deg 0 --to-deg 90 --steps 7");
  REQUIRE(full.code == 0);
  const json fd = json::parse(full.out);
  CHECK(fd["pass"] == true);
  CHECK(fd["samples"][0]["endpoint"] == true);
  CHECK(fd["samples"][6]["endpoint"] == true);

  const RunResult sy =
      run("sync --polyhedron tetrahedron --phi0-deg 10 --phi1-deg 80 --steps 25");
  REQUIRE(sy.code == 0);
  const json yd = json::parse(sy.out);
  CHECK(yd["pass"] == true);
  CHECK(yd["rate_check"]["pass"] == true);
  CHECK(yd["trajectory"]["pass"] == true);
  CHECK(yd["trajectory"]["max_fold_spread_rad"].get<double>() < 1e-6);
  CHECK(yd["trajectory"]["final_fold_angles_deg"][0].get<double>() ==
        doctest::Approx(80.0).epsilon(1e-9));

  // equal endpoints: trivially synchronized
  const RunResult still =
      run("sync --polyhedron tetrahedron --phi0-deg 40 --phi1-deg 40 --steps 5");
  REQUIRE(still.code == 0);
  const json td = json::parse(still.out);
  CHECK(td["pass"] == true);
  CHECK(td["trajectory"]["max_fold_spread_rad"] == 0.0);
}

TEST_CASE("byte determinism") {
  for (const char* args : {
           "analyze --polyhedron cube --phi-deg 30",
           "table",
           "mesh --polyhedron dodecahedron --phi-deg 37",
           "curves --samples 19",
       }) {
    CAPTURE(args);
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("output file writing") {
  const auto path = std::filesystem::temp_directory_path() /
                    ("dpm_outfile_" + std::to_string(::getpid()) + ".csv");
  const RunResult direct = run("curves --samples 5");
  const RunResult filed = run("curves --samples 5 --out \"" + path.string() + "\"");
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::filesystem::remove(path);

  const RunResult bad = run("curves --out /nonexistent_dir_zz/x.csv");
  CHECK(bad.code == 1);
  CHECK(parse_error(bad)["type"] == "io_error");
}

TEST_CASE("help output") {
  const RunResult top = run("--help");
  CHECK(top.code == 0);
  CHECK(top.out.find("analyze") != std::string::npos);
  CHECK(top.out.find("curves") != std::string::npos);
  const RunResult sub = run("analyze --help");
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--polyhedron") != std::string::npos);
  CHECK(sub.out.find("1e-9") != std::string::npos);  // documented default
}
