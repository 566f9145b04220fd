#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path kRoot = fs::temp_directory_path() / "landau_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(LANDAU_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

std::string out(const std::string& name) { return "--out-dir " + (kRoot / name).string(); }

}  // namespace

TEST_CASE("spectrum") {
  fs::remove_all(kRoot);
  REQUIRE(run("spectrum --nphi 3 --lx 1 --ly 1 --grid 96 --levels 3 " + out("s3")) == 0);
  const auto doc = load(kRoot / "s3" / "spectrum.json");
  REQUIRE(doc["oracle"]["clusters"].size() == 3);
  for (const auto& c : doc["oracle"]["clusters"]) CHECK(c["multiplicity"] == 3);
  const auto manifest = load(kRoot / "s3" / "manifest.json");
  CHECK(manifest["command"] == "spectrum");
  CHECK(manifest["outputs"].size() == 1);

  REQUIRE(run("spectrum --nphi 1 --grid 48 " + out("s1")) == 0);
  CHECK(load(kRoot / "s1" / "spectrum.json")["oracle"]["clusters"][0]["multiplicity"] == 1);

  CHECK(run("spectrum --lx 1 " + out("bad")) == 2);
  CHECK(run("spectrum --nphi 1 --bogus " + out("bad")) == 2);
  CHECK(run("spectrum --nphi 1 --grid 4 " + out("bad")) == 2);
}

TEST_CASE("config file with flag override") {
  fs::create_directories(kRoot);
  std::ofstream(kRoot / "torus.cfg") << "nphi = 2\nlx = 2\n";
  REQUIRE(run("spectrum --config " + (kRoot / "torus.cfg").string() + " --lx 1 --grid 32 --levels 2 " + out("cfg")) == 0);
  const auto doc = load(kRoot / "cfg" / "spectrum.json");
  CHECK(doc["config"]["nphi"] == 2);
  CHECK(doc["config"]["lx"] == 1.0);
}

TEST_CASE("density") {
  const std::string pi = "3.141592653589793";
  REQUIRE(run("density --nphi 1 --theta-x " + pi + " --theta-y " + pi + " --grid 128 " + out("fig")) == 0);
  const auto d = load(kRoot / "fig" / "density.json");
  CHECK(std::abs(d["argmax"]["x"].get<double>() - 0.5) <= 1.0 / 128);
  CHECK(std::abs(d["argmax"]["y"].get<double>() - 0.5) <= 1.0 / 128);
  CHECK(d["local_maxima"] == 1);
  CHECK(slurp(kRoot / "fig" / "density.pgm").rfind("P2\n128 128\n255\n", 0) == 0);

  REQUIRE(run("density --nphi 1 --state coherent --grid 40 " + out("coh")) == 0);
  CHECK(std::abs(load(kRoot / "coh" / "density.json")["integral"].get<double>() - 1.0) < 1e-10);
  CHECK(slurp(kRoot / "coh" / "density.pgm").rfind("P2\n40 40\n", 0) == 0);
  const std::string csv = slurp(kRoot / "coh" / "density.csv");
  CHECK(csv.rfind("x,y,density\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 40 * 40 + 1);

  CHECK(run("density --nphi 1 --state nothing " + out("bad")) == 2);
  CHECK(run("density --nphi 1 --basis lz " + out("bad")) == 2);
}

TEST_CASE("group") {
  REQUIRE(run("group --nphi 4 " + out("g4")) == 0);
  const auto g = load(kRoot / "g4" / "group.json");
  CHECK(g["multiplication_table"].size() == 64);
  CHECK(g["weyl_max_deviation"].get<double>() < 1e-14);
  CHECK(g["representation"]["ty"][1][1] == json::array({0.0, 1.0}));
  CHECK(g["representation"]["tx"][0][3] == json::array({1.0, 0.0}));
  CHECK(g["center"].size() == 4);
  CHECK(run("group --nphi 13 " + out("bad")) == 2);
}

TEST_CASE("verify") {
  REQUIRE(run("verify " + out("v")) == 0);
  const auto v = load(kRoot / "v" / "verify.json");
  CHECK(v["all_pass"] == true);
  for (const auto& c : v["checks"]) CHECK(c["residual"].is_number());
  CHECK(run("verify --flux-override 2.5 " + out("v25")) == 1);
  bool flux_failed = false;
  const auto report = load(kRoot / "v25" / "verify.json");
  for (const auto& c : report["checks"]) {
    if (c["name"] == "flux_consistency") flux_failed = c["pass"] == false;
  }
  CHECK(flux_failed);
}

TEST_CASE("orbit") {
  REQUIRE(run("orbit --nphi 1 --center-x 0.5 --center-y 0.5 --radius 0.2 " + out("o1")) == 0);
  auto o = load(kRoot / "o1" / "orbit.json");
  CHECK(o["wraps"] == false);
  CHECK(o["closed"] == true);
  REQUIRE(run("orbit --nphi 1 --radius 1.4 " + out("o2")) == 0);
  o = load(kRoot / "o2" / "orbit.json");
  CHECK(o["wraps"] == true);
  CHECK(o["closure_residual"].get<double>() < 1e-9);
}

TEST_CASE("coherent") {
  REQUIRE(run("coherent --nphi 1 --lambda-prime-re 0.4 " + out("c0")) == 0);
  std::istringstream in(slurp(kRoot / "c0" / "coherent.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,mean_x,mean_y,spread_x,spread_y,energy,energy_spread");
  std::string first;
  std::getline(in, first);
  while (std::getline(in, line)) {
    CHECK(line.substr(line.find(',')) == first.substr(first.find(',')));
  }
  REQUIRE(run("coherent --nphi 2 --lambda-re 0.7 --lambda-im -0.2 " + out("c1")) == 0);
  std::istringstream in2(slurp(kRoot / "c1" / "coherent.csv"));
  std::getline(in2, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in2, line)) {
    std::vector<double> r;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  CHECK(std::abs(rows.back()[1] - rows.front()[1]) < 1e-9);
  CHECK(std::abs(rows.back()[2] - rows.front()[2]) < 1e-9);
  for (const auto& r : rows) CHECK(std::abs(r[5] - rows.front()[5]) < 1e-12);
}

TEST_CASE("deterministic outputs") {
  for (const std::string cmd : {"spectrum --nphi 2 --grid 32 --levels 2", "density --nphi 2 --grid 32",
                                "group --nphi 3", "orbit --nphi 1 --radius 0.7",
                                "coherent --nphi 1 --lambda-re 0.3"}) {
    REQUIRE(run(cmd + " " + out("r1")) == 0);
    REQUIRE(run(cmd + " " + out("r2")) == 0);
    const auto manifest = load(kRoot / "r1" / "manifest.json");
    for (const auto& f : manifest["outputs"]) {
      const std::string name = f.get<std::string>();
      CHECK_MESSAGE(slurp(kRoot / "r1" / name) == slurp(kRoot / "r2" / name), cmd << " " << name);
    }
    fs::remove_all(kRoot / "r1");
    fs::remove_all(kRoot / "r2");
  }
}
