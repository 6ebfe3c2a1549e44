// expander_forge: sampling sweeps, spectra, Cheeger certificates, bound
// tables and expander-family construction from the command line.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid arguments or parity,
// 3 guard exceeded, 4 certification failure, 5 internal inconsistency.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "expander_forge/bounds.hpp"
#include "expander_forge/cheeger.hpp"
#include "expander_forge/commands.hpp"
#include "expander_forge/construct.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/graph_io.hpp"
#include "expander_forge/manifest.hpp"
#include "expander_forge/report.hpp"
#include "expander_forge/rng.hpp"
#include "expander_forge/spectra.hpp"

namespace fs = std::filesystem;
using namespace expander_forge;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Run {
 public:
  Run(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) manifest_.command_line.emplace_back(argv[i]);
    manifest_.started_at = utc_timestamp();
  }

  void set_seed(std::uint64_t seed) {
    manifest_.seed = seed;
    manifest_.rng = Rng::kRngName;
  }

  void write(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
      std::error_code ec;
      fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + path.string());
    manifest_.outputs.push_back({path.string(), sha256_hex(text)});
  }

  // Writes to `path`, or to stdout when no path was given.
  void emit(const std::string& path, const std::string& text) {
    if (path.empty())
      std::cout << text;
    else
      write(path, text);
  }

  void finish(const fs::path& manifest_path) {
    if (manifest_.outputs.empty()) return;
    manifest_.finished_at = utc_timestamp();
    try {
      write_manifest(manifest_path, manifest_);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  }

 private:
  RunManifest manifest_;
};

fs::path sibling(const fs::path& out, const std::string& suffix) {
  fs::path p = out;
  p.replace_extension(suffix);
  return p;
}

MultiGraph load(const std::string& path) {
  if (!fs::exists(path)) throw IoError("no such file: " + path);
  return load_graph(path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random degree-1/degree-3 graphs: spectra, Cheeger constants, bounds and constructions"};
  app.require_subcommand(1);

  int guard = guard_from_env(kDefaultCheegerGuard);
  std::string out;
  int chi = 1;
  int n = 3;
  std::vector<int> chis;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string mu_text = "1/50";
  std::string theta_text = "3";
  int g_min = 2;
  int g_max = 12;
  std::string n_rule = "pow:1/3";
  std::string audit;
  std::string subsets = "all";
  std::string graph_file;
  std::string method = "auto";
  double tol = kDefaultTol;
  bool upper = false;

  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--guard", guard, "Exact Cheeger search guard (overrides EXPANDER_FORGE_GUARD)")
        ->check(CLI::Range(1, 64));
  };

  auto* sample = app.add_subcommand("sample", "Per-trial connectivity, lambda1, sigma1, exact h and genus");
  sample->add_option("--chi", chi, "Degree-3 vertex count")->required();
  sample->add_option("--n", n, "Degree-1 vertex count")->required();
  sample->add_option("--trials", trials, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Base seed");
  sample->add_option("--out", out, "CSV path (stdout if omitted)");
  add_guard(sample);

  auto* sweep = app.add_subcommand("sweep", "Connectivity fraction along a list of chi values");
  sweep->add_option("--chi", chis, "Degree-3 vertex counts")->required()->expected(1, -1);
  sweep->add_option("--n-rule", n_rule, "pow:<alpha> or linear:<c>");
  sweep->add_option("--trials", trials, "Samples per point")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Base seed");
  sweep->add_option("--out", out, "CSV path (stdout if omitted)");

  auto* bounds = app.add_subcommand("bounds", "Exact mu-pair sum of X*Y*Z bounds");
  bounds->add_option("--chi", chi, "Degree-3 vertex count")->required();
  bounds->add_option("--n", n, "Degree-1 vertex count")->required();
  bounds->add_option("--mu", mu_text, "Threshold mu (rational or decimal)");
  bounds->add_option("--out", out, "CSV path (stdout if omitted)");
  bounds->add_option("--audit", audit, "Monte Carlo audit of one triple a,b,s");
  bounds->add_option("--trials", trials, "Audit samples")->check(CLI::PositiveNumber);
  bounds->add_option("--seed", seed, "Audit seed");
  bounds->add_option("--subsets", subsets, "Counted sets: all or pendant-closed")
      ->check(CLI::IsMember({"all", "pendant-closed"}));

  auto* construct = app.add_subcommand("construct", "Expander family with n(g)/g -> theta");
  construct->add_option("--theta", theta_text, "Target ratio (positive rational)");
  construct->add_option("--g-min", g_min, "Smallest genus");
  construct->add_option("--g-max", g_max, "Largest genus");
  construct->add_option("--out", out, "Output directory")->required();
  construct->add_option("--seed", seed, "Seed for sampled base graphs");
  add_guard(construct);

  auto* spectra = app.add_subcommand("spectra", "Laplacian and Steklov spectra of a graph file");
  spectra->add_option("graph", graph_file, "Graph file")->required();
  spectra->add_option("--tol", tol, "Eigenvalue tolerance");
  spectra->add_option("--out", out, "JSON path (stdout if omitted)");

  auto* cheeger = app.add_subcommand("cheeger", "Cheeger certificate of a graph file");
  cheeger->add_option("graph", graph_file, "Graph file")->required();
  cheeger->add_option("--method", method, "auto, subsets or bonds")->check(CLI::IsMember({"auto", "subsets", "bonds"}));
  cheeger->add_flag("--upper", upper, "Spectral sweep upper bound instead of the exact value");
  cheeger->add_option("--out", out, "JSON path (stdout if omitted)");
  add_guard(cheeger);

  auto* split = app.add_subcommand("split", "Two-tree split, balanced subset and test function of a graph file");
  split->add_option("graph", graph_file, "Graph file")->required();
  split->add_option("--out", out, "JSON path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Run run(argc, argv);
  try {
    if (*sample) {
      const SampleConfig cfg{chi, n, trials, seed};
      cfg.validate();
      run.set_seed(seed);
      const auto rows = run_sample(cfg, guard);
      run.emit(out, sample_csv(rows));
      if (!out.empty()) {
        run.write(sibling(out, ".summary.csv"), sample_summary_csv(cfg, rows));
        run.finish(sibling(out, ".manifest.json"));
      } else {
        std::cerr << sample_summary_csv(cfg, rows);
      }
    } else if (*sweep) {
      const NRule rule = NRule::parse(n_rule);
      for (int c : chis)
        if (c < 1) throw ParityError("chi must be at least 1");
      run.set_seed(seed);
      run.emit(out, sweep_csv(run_sweep(chis, rule, trials, seed)));
      if (!out.empty()) run.finish(sibling(out, ".manifest.json"));
    } else if (*bounds) {
      require_valid_parameters(chi, n);
      const Rational mu = parse_rational(mu_text);
      if (mu <= 0) throw ParseError("mu must be positive");
      run.emit(out, bounds_csv(chi, n, mu, mu_pair_sum(chi, n, mu)));
      if (!out.empty()) {
        Json pairs = Json::array();
        for (const auto& t : mu_pair_terms(chi, n, mu)) pairs.push_back(to_json(t));
        run.write(sibling(out, ".pairs.json"), dump(pairs));
      }
      if (!audit.empty()) {
        int a = 0, b = 0, s = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(audit);
        if (!(is >> a >> c1 >> b >> c2 >> s) || c1 != ',' || c2 != ',' || !is.eof())
          throw ParseError("--audit expects a,b,s");
        run.set_seed(seed);
        const auto cls = subsets == "all" ? SubsetClass::All : SubsetClass::PendantClosed;
        const auto rep = audit_first_moment(chi, n, a, b, s, trials, seed, cls);
        if (out.empty())
          std::cout << dump(to_json(rep));
        else
          run.write(sibling(out, ".audit.json"), dump(to_json(rep)));
      }
      if (!out.empty()) run.finish(sibling(out, ".manifest.json"));
    } else if (*construct) {
      run.set_seed(seed);
      const auto rows = run_construct(parse_rational(theta_text), g_min, g_max, guard, seed);
      const fs::path dir(out);
      for (const auto& r : rows) run.write(dir / ("g_" + std::to_string(r.member.genus) + ".graph"), to_graph_text(r.member.graph));
      run.write(dir / "manifest.csv", construct_manifest_csv(rows));
      run.finish(dir / "run_manifest.json");
    } else if (*spectra) {
      run.emit(out, dump(to_json(spectral_report(load(graph_file), tol))));
    } else if (*cheeger) {
      const MultiGraph g = load(graph_file);
      CheegerCertificate cert;
      if (upper) {
        cert = cheeger_upper(g, true);
      } else {
        CheegerOptions opts;
        opts.guard = guard;
        opts.method = method == "subsets" ? CheegerMethod::Subsets
                      : method == "bonds" ? CheegerMethod::Bonds
                                          : CheegerMethod::Auto;
        cert = cheeger_exact(g, opts);
      }
      run.emit(out, dump(to_json(cert)));
    } else if (*split) {
      const MultiGraph g = load(graph_file);
      Json j;
      j["split"] = to_json(two_tree_split(g));
      if (g.boundary_count() >= 2) {
        const auto h = balanced_boundary_subset(g);
        j["balanced"] = to_json(h);
        const auto f = steklov_test_function(g, h);
        j["test_function"] = to_json(f);
      }
      run.emit(out, dump(j));
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const CertificationFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const InternalInconsistency& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
