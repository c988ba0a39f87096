#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(TURAN_FORGE_EXE) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json json_file(const fs::path& path) { return nlohmann::json::parse(slurp(path)); }

struct Workdir {
  fs::path dir = fs::current_path() / "cli_test_work";
  Workdir() {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("construct then verify") {
  Workdir w;
  REQUIRE(run("construct --t 2 --p 5 --out " + (w / "g.txt") + " --summary " + (w / "s.json")) == 0);
  const auto text = slurp(w / "g.txt");
  CHECK(text.rfind("turan-forge v1 t=2 p=5 a=4 n=10 g=2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 61);
  const auto summary = json_file(w / "s.json");
  CHECK(summary["edge_count"] == 60);
  CHECK(summary["formula_match"] == true);
  CHECK(summary["schema"] == "v1");

  REQUIRE(run("verify --t 2 " + (w / "g.txt") + " -o " + (w / "v.json")) == 0);
  const auto report = json_file(w / "v.json");
  CHECK(report["max_codegree"] == 1);
  CHECK(report["complete_scan"] == true);
  CHECK(report["witness"].is_null());

  // t from the header when --t is omitted
  CHECK(run("verify " + (w / "g.txt") + " -o " + (w / "v2.json")) == 0);
}

TEST_CASE("verify exits 3 on a K_{2,t}") {
  Workdir w;
  {
    std::ofstream out(w / "k.txt");
    out << "turan-forge v1 t=2 n=2\n0 2\n0 3\n1 2\n1 3\n";
  }
  CHECK(run("verify --t 2 " + (w / "k.txt") + " -o " + (w / "v.json")) == 3);
  CHECK(json_file(w / "v.json")["witness"]["u"] == 0);
}

TEST_CASE("exit codes") {
  Workdir w;
  CHECK(run("construct --t 3 --p 7 --out " + (w / "x.txt")) == 2);
  CHECK(slurp("cli_stderr.txt").find("odd") != std::string::npos);
  CHECK(run("construct --t 4 --p 11 --out " + (w / "x.txt")) == 2);
  CHECK(run("construct --t 2 --p 61 --max-vertices 100 --out " + (w / "x.txt")) == 5);
  CHECK(run("verify --t 2 " + (w / "missing.txt")) == 4);
  CHECK(run("construct --t 2 --p 5 --out /nonexistent-dir/x.txt") == 4);
  CHECK(run("bogus") == 2);
  CHECK(run("oracle --n 3 --t 2 --budget 10 -o " + (w / "o.json")) == 5);
  CHECK(json_file(w / "o.json")["exact"] == false);
}

TEST_CASE("--m searches for a suitable prime") {
  Workdir w;
  REQUIRE(run("bounds --t 4 --m 10 -o " + (w / "b.json")) == 0);
  CHECK(json_file(w / "b.json")["p"] == 13);
}

TEST_CASE("lemma, bounds, oracle, report") {
  Workdir w;
  REQUIRE(run("lemma --t 6 --p 11 -o " + (w / "l.json")) == 0);
  CHECK(json_file(w / "l.json")["certificates"].size() == 10);

  REQUIRE(run("bounds --t 2 --p 61 --format csv -o " + (w / "b.csv")) == 0);
  CHECK(slurp(w / "b.csv").rfind("t,p,n,lower,upper,normalized_lower,sandwich_ratio\n2,61,1830,164700,", 0) == 0);

  REQUIRE(run("oracle --n 2 --t 2 -o " + (w / "o.json") + " --witness " + (w / "o.txt")) == 0);
  CHECK(json_file(w / "o.json")["exact_value"] == 7);
  REQUIRE(run("verify --t 2 " + (w / "o.txt") + " -o " + (w / "ov.json")) == 0);

  REQUIRE(run("report --t 4 --p 7,13,37 -o " + (w / "r.csv")) == 0);
  const auto csv = slurp(w / "r.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("4,37,222,11988,") != std::string::npos);
}

TEST_CASE("construct output is byte-identical across thread counts") {
  Workdir w;
  REQUIRE(run("construct --t 4 --p 13 --threads 1 --out " + (w / "a.txt")) == 0);
  REQUIRE(run("construct --t 4 --p 13 --threads 4 --out " + (w / "b.txt")) == 0);
  CHECK(slurp(w / "a.txt") == slurp(w / "b.txt"));
}
