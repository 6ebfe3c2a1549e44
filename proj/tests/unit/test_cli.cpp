#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "expander_forge/commands.hpp"
#include "expander_forge/construct.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/graph_io.hpp"
#include "expander_forge/manifest.hpp"
#include "fixtures.hpp"

using namespace expander_forge;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("expander_forge_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(EXPANDER_FORGE_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("n-rule parsing") {
  const NRule cube = NRule::parse("pow:1/3");
  CHECK(cube.raw_n(50) == 3);
  CHECK(cube.raw_n(64) == 4);
  CHECK(cube.raw_n(100) == 4);
  CHECK(cube.raw_n(200) == 5);
  CHECK(cube.raw_n(400) == 7);
  CHECK(cube.n(50) == 2);
  CHECK(cube.n(100) == 4);
  CHECK(cube.n(200) == 4);
  CHECK(cube.n(400) == 6);
  const NRule full = NRule::parse("linear:3");
  CHECK(full.n(50) == 150);
  CHECK(NRule::parse("pow:1/2").raw_n(800) == 28);
  CHECK_THROWS_AS(NRule::parse("pow"), ParseError);
  CHECK_THROWS_AS(NRule::parse("cubic:1"), ParseError);
  CHECK_THROWS_AS(NRule::parse("linear:-1"), ParseError);
}

TEST_CASE("sample rows") {
  const auto rows = run_sample({2, 0, 100, 42});
  REQUIRE(rows.size() == 100);
  for (const auto& r : rows) {
    CHECK(r.connected);
    CHECK(r.genus == 2);
    CHECK(r.h_exact.has_value());
    CHECK_FALSE(r.sigma1.has_value());
  }
  const auto stars = run_sample({1, 3, 10, 7});
  for (const auto& r : stars) {
    CHECK(r.lambda1 == doctest::Approx(1.0));
    CHECK(*r.sigma1 == doctest::Approx(1.0));
    CHECK(*r.h_exact == 1);
  }
  const std::string csv = sample_csv(stars);
  CHECK(lines(csv).front() == "trial,connected,lambda1,sigma1,h_exact,genus");
  CHECK(lines(csv).size() == 11);
  CHECK(csv == sample_csv(run_sample({1, 3, 10, 7})));
  const auto summary = lines(sample_summary_csv({1, 3, 10, 7}, stars));
  CHECK(summary.size() == 2);
  CHECK(summary[1].rfind("1,3,10,7,10,1,", 0) == 0);
}

TEST_CASE("sweep rows report the adjusted n") {
  const auto rows = run_sweep({50, 100}, NRule::parse("pow:1/3"), 200, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n_requested == 3);
  CHECK(rows[0].n == 2);
  CHECK(rows[1].n == 4);
  const auto csv = lines(sweep_csv(rows));
  CHECK(csv[0] == "chi,n,trials,connected_fraction,ci_low,ci_high,seed,n_requested");
  CHECK(csv[1].rfind("50,2,200,", 0) == 0);

  for (const auto& r : run_sweep({50, 100}, NRule::parse("pow:0"), 500, 3)) {
    CHECK(r.n <= 2);
    CHECK(r.estimate.fraction() >= 0.9);
  }
}

TEST_CASE("bounds CSV") {
  CHECK(bounds_csv(10, 0, Rational(1, 50), mu_pair_sum(10, 0, Rational(1, 50))) ==
        "chi,n,mu,sum_num,sum_den,sum_float\n10,0,1/50,0,1,0\n");
}

TEST_CASE("construct rows") {
  const auto rows = run_construct(3, 2, 4);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.n == 3 * (r.member.genus - 1));
    CHECK(r.chi == 2 * r.member.genus - 2 + r.n);
    if (r.cheeger_ok) CHECK(*r.cheeger_ok);
  }
  CHECK(lines(construct_manifest_csv(rows))[0] == "g,n,chi,h_lower,lambda1,h_exact,cheeger_ok,n_over_g");
  CHECK_THROWS_AS(run_construct(3, 3, 2), PreconditionError);
}

TEST_CASE("manifest round trip and digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  RunManifest m;
  m.command_line = {"expander_forge", "sample", "--chi", "2"};
  m.seed = 42;
  m.rng = "mt19937_64+splitmix64-stream/v1";
  m.started_at = utc_timestamp();
  m.finished_at = m.started_at;
  m.outputs = {{"out.csv", sha256_hex("x")}};
  const fs::path dir = scratch("manifest");
  write_manifest(dir / "m.json", m);
  CHECK(read_manifest(dir / "m.json") == m);
  CHECK(manifest_from_json(to_json(m)) == m);
  CHECK(sha256_file(dir / "m.json") == sha256_hex(slurp(dir / "m.json")));
  CHECK_THROWS_AS(manifest_from_json(Json::object()), ParseError);
  CHECK(m.started_at.size() == 20);
  CHECK(m.started_at.back() == 'Z');
}

TEST_CASE("command line exit codes") {
  const fs::path dir = scratch("exit");
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("sample --chi 1 --n 2") == 2);
  CHECK(run_cli("sample --chi 1") == 2);
  CHECK(run_cli("bounds --chi 4 --n 2 --mu abc") == 2);
  CHECK(run_cli("spectra " + (dir / "missing.graph").string()) == 1);

  save_graph(dir / "big.graph", plant_trees(petersen_graph(), 1));
  CHECK(run_cli("cheeger --guard 4 " + (dir / "big.graph").string()) == 3);
  CHECK(run_cli("cheeger --method subsets " + (dir / "big.graph").string()) == 3);
  CHECK(run_cli("construct --theta 3 --g-min 5 --g-max 5 --guard 6 --out " + (dir / "fam").string()) == 4);

  save_graph(dir / "star.graph", fixture::star());
  CHECK(run_cli("cheeger --out " + (dir / "star.json").string() + " " + (dir / "star.graph").string()) == 0);
  CHECK(slurp(dir / "star.json").find("\"omega\"") != std::string::npos);
  CHECK(run_cli("split --out " + (dir / "split.json").string() + " " + (dir / "star.graph").string()) == 0);
  CHECK(run_cli("spectra --out " + (dir / "spectra.json").string() + " " + (dir / "star.graph").string()) == 0);
}

TEST_CASE("command line outputs are byte-identical across runs") {
  const fs::path dir = scratch("determinism");
  const std::string a = (dir / "a.csv").string();
  const std::string b = (dir / "b.csv").string();
  REQUIRE(run_cli("sample --chi 4 --n 2 --trials 50 --seed 9 --out " + a) == 0);
  REQUIRE(run_cli("sample --chi 4 --n 2 --trials 50 --seed 9 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(dir / "a.summary.csv") == slurp(dir / "b.summary.csv"));
  const RunManifest m = read_manifest(dir / "a.manifest.json");
  REQUIRE(m.outputs.size() == 2);
  CHECK(m.outputs[0].sha256 == sha256_file(a));
  CHECK(m.seed == 9u);
  CHECK(m.rng == Rng::kRngName);

  REQUIRE(run_cli("bounds --chi 4 --n 2 --mu 3/2 --out " + (dir / "bounds.csv").string()) == 0);
  CHECK(slurp(dir / "bounds.pairs.json").find("\"8/11\"") != std::string::npos);

  REQUIRE(run_cli("construct --theta 3 --g-min 2 --g-max 3 --out " + (dir / "c1").string()) == 0);
  REQUIRE(run_cli("construct --theta 3 --g-min 2 --g-max 3 --out " + (dir / "c2").string()) == 0);
  CHECK(slurp(dir / "c1" / "manifest.csv") == slurp(dir / "c2" / "manifest.csv"));
  CHECK(slurp(dir / "c1" / "g_3.graph") == slurp(dir / "c2" / "g_3.graph"));
  CHECK(topology(load_graph(dir / "c1" / "g_3.graph")).genus == 3);

  REQUIRE(run_cli("sweep --chi 20 40 --trials 100 --seed 2 --out " + (dir / "s1.csv").string()) == 0);
  REQUIRE(run_cli("sweep --chi 20 40 --trials 100 --seed 2 --out " + (dir / "s2.csv").string()) == 0);
  CHECK(slurp(dir / "s1.csv") == slurp(dir / "s2.csv"));
}

}
