#include "expander_forge/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "expander_forge/errors.hpp"
#include "expander_forge/report.hpp"
#include "expander_forge/spectra.hpp"

namespace expander_forge {

namespace {

std::string opt_double(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

double nearest_rank(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

}  // namespace

NRule NRule::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("n-rule must look like pow:<alpha> or linear:<c>");
  NRule r;
  r.text = std::string(text);
  const auto kind = text.substr(0, colon);
  if (kind == "pow")
    r.kind = Kind::Pow;
  else if (kind == "linear")
    r.kind = Kind::Linear;
  else
    throw ParseError("unknown n-rule '" + std::string(kind) + "'");
  r.param = parse_rational(text.substr(colon + 1));
  if (r.param < 0) throw ParseError("n-rule parameter must be non-negative");
  return r;
}

int NRule::raw_n(int chi) const {
  if (chi < 1) throw ParityError("chi must be at least 1");
  if (kind == Kind::Linear) {
    const Rational v = param * chi;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return fl.fits_sint_p() ? static_cast<int>(fl.get_si()) : 3 * chi;
  }
  // floor(chi^(p/q)): the largest n with n^q <= chi^p, found from a floating
  // estimate and corrected exactly.
  const unsigned long p = param.get_num().get_ui();
  const unsigned long q = param.get_den().get_ui();
  BigInt target;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(chi), p);
  auto fits = [&](long n) {
    BigInt x;
    mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(n), q);
    return x <= target;
  };
  const double estimate = std::pow(static_cast<double>(chi), to_double(param));
  long n = std::isfinite(estimate) ? static_cast<long>(std::min(estimate, 3.0 * chi + 1.0)) : 3L * chi + 1;
  while (n > 0 && !fits(n)) --n;
  while (n <= 3L * chi && fits(n + 1)) ++n;
  return static_cast<int>(std::min<long>(n, 3L * chi));
}

std::optional<CheegerCertificate> try_cheeger_exact(const MultiGraph& g, int guard) {
  CheegerOptions opts;
  opts.guard = guard;
  try {
    return cheeger_exact(g, opts);
  } catch (const GuardExceeded&) {
    return std::nullopt;
  }
}

std::vector<SampleRow> run_sample(const SampleConfig& cfg, int guard) {
  cfg.validate();
  std::vector<SampleRow> rows;
  rows.reserve(cfg.trials);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const MultiGraph g = build_graph(sample_partition(cfg, t));
    const Topology topo = topology(g);
    SampleRow row;
    row.trial = t;
    row.connected = topo.components == 1;
    row.genus = topo.genus;
    row.lambda1 = laplacian_spectrum(g).lambda1;
    if (row.connected && g.boundary_count() >= 2) row.sigma1 = steklov_spectrum(g).sigma1;
    if (row.connected) {
      if (auto cert = try_cheeger_exact(g, guard)) row.h_exact = cert->h;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sample_csv(const std::vector<SampleRow>& rows) {
  std::ostringstream os;
  os << "trial,connected,lambda1,sigma1,h_exact,genus\n";
  for (const auto& r : rows) {
    os << r.trial << ',' << (r.connected ? 1 : 0) << ',' << format_double(r.lambda1) << ',' << opt_double(r.sigma1)
       << ',' << (r.h_exact ? format_double(to_double(*r.h_exact)) : std::string()) << ',' << r.genus << '\n';
  }
  return os.str();
}

std::string sample_summary_csv(const SampleConfig& cfg, const std::vector<SampleRow>& rows) {
  std::uint64_t connected = 0;
  std::vector<double> lambda;
  for (const auto& r : rows) {
    connected += r.connected ? 1 : 0;
    lambda.push_back(r.lambda1);
  }
  std::sort(lambda.begin(), lambda.end());
  const auto ci = wilson_interval(connected, rows.size());
  const double frac = rows.empty() ? 0.0 : static_cast<double>(connected) / static_cast<double>(rows.size());
  std::ostringstream os;
  os << "chi,n,trials,seed,connected,connected_fraction,ci_low,ci_high,lambda1_p05,lambda1_p50,lambda1_p95\n";
  os << cfg.chi << ',' << cfg.n << ',' << rows.size() << ',' << cfg.seed << ',' << connected << ','
     << format_double(frac) << ',' << format_double(ci.low) << ',' << format_double(ci.high) << ','
     << format_double(nearest_rank(lambda, 0.05)) << ',' << format_double(nearest_rank(lambda, 0.5)) << ','
     << format_double(nearest_rank(lambda, 0.95)) << '\n';
  return os.str();
}

std::vector<SweepRow> run_sweep(const std::vector<int>& chis, const NRule& rule, std::uint64_t trials,
                                std::uint64_t seed) {
  std::vector<SweepRow> rows;
  for (int chi : chis) {
    SweepRow row;
    row.chi = chi;
    row.n_requested = rule.raw_n(chi);
    row.n = parity_adjusted_n(chi, row.n_requested);
    row.seed = seed;
    row.estimate = estimate_connectivity({chi, row.n, trials, seed});
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "chi,n,trials,connected_fraction,ci_low,ci_high,seed,n_requested\n";
  for (const auto& r : rows)
    os << r.chi << ',' << r.n << ',' << r.estimate.trials << ',' << format_double(r.estimate.fraction()) << ','
       << format_double(r.estimate.ci_low) << ',' << format_double(r.estimate.ci_high) << ',' << r.seed << ','
       << r.n_requested << '\n';
  return os.str();
}

std::string bounds_csv(int chi, int n, const Rational& mu, const Rational& sum) {
  std::ostringstream os;
  os << "chi,n,mu,sum_num,sum_den,sum_float\n";
  os << chi << ',' << n << ',' << to_string(mu) << ',' << sum.get_num().get_str() << ',' << sum.get_den().get_str()
     << ',' << format_double(to_double(sum)) << '\n';
  return os.str();
}

std::vector<ConstructRow> run_construct(const Rational& theta, int g_min, int g_max, int guard, std::uint64_t seed) {
  if (g_min < 1 || g_max < g_min) throw PreconditionError("genus range must satisfy 1 <= g-min <= g-max");
  const FamilyPlan plan = FamilyPlan::from_theta(theta);
  const BaseProvider base = certified_base_provider(seed, guard);
  std::vector<ConstructRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    ConstructRow row;
    row.member = expander_family(plan, g, base);
    const MultiGraph& graph = row.member.graph;
    row.chi = graph.interior_count();
    row.n = graph.boundary_count();
    row.lambda1 = laplacian_spectrum(graph).lambda1;
    if (auto cert = try_cheeger_exact(graph, guard)) {
      row.h_exact = cert->h;
      const double h = to_double(cert->h);
      row.cheeger_ok = row.lambda1 >= h * h / 18.0 - kDefaultTol;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string construct_manifest_csv(const std::vector<ConstructRow>& rows) {
  std::ostringstream os;
  os << "g,n,chi,h_lower,lambda1,h_exact,cheeger_ok,n_over_g\n";
  for (const auto& r : rows) {
    const auto& h_lower = r.member.h_lower;
    os << r.member.genus << ',' << r.n << ',' << r.chi << ','
       << (h_lower ? format_double(to_double(*h_lower)) : std::string()) << ',' << format_double(r.lambda1) << ','
       << (r.h_exact ? format_double(to_double(*r.h_exact)) : std::string()) << ','
       << (r.cheeger_ok ? (*r.cheeger_ok ? "1" : "0") : "") << ','
       << format_double(static_cast<double>(r.n) / r.member.genus) << '\n';
  }
  return os.str();
}

}  // namespace expander_forge
