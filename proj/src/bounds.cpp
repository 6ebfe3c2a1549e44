#include "expander_forge/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "detail/connected_sets.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/sampler.hpp"

namespace expander_forge {

namespace {

BigInt pow2(int k) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

// floor(mu * k) for k >= 0.
long floor_scaled(const Rational& mu, int k) {
  BigInt num = mu.get_num() * k;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), mu.get_den().get_mpz_t());
  return q.fits_slong_p() ? q.get_si() : (q > 0 ? 1L << 40 : -(1L << 40));
}

struct YShape {
  bool admissible = false;
  int m = 0;
  int p = 0;
  int q = 0;
};

YShape y_shape(int chi, int n, int a, int b, int s) {
  YShape y;
  y.m = (3 * chi - n) / 2;
  const int p2 = 3 * b - a - s;
  const int q2 = 3 * chi - n - (3 * b - a) - s;
  if (p2 < 0 || q2 < 0 || p2 % 2 != 0 || q2 % 2 != 0) return y;
  y.admissible = true;
  y.p = p2 / 2;
  y.q = q2 / 2;
  return y;
}

template <class Fn>
void for_each_mu_pair(int chi, int n, const Rational& mu, Fn&& fn) {
  for (int b = 0; b <= chi; ++b)
    for (int a = 0; a <= n; ++a) {
      const int size = a + b;
      if (size < 1 || 2 * size > chi + n) continue;
      const long s_cap = std::min<long>(floor_scaled(mu, size), static_cast<long>(b) - a + 2);
      for (int s = 1; s <= s_cap; ++s) fn(a, b, s);
    }
}

void require_pendant_structure(const MultiGraph& g) {
  for (int v : g.boundary_vertices()) {
    if (g.degree(v) != 1 || g.loop_count(v) != 0)
      throw PreconditionError("boundary vertex " + std::to_string(v) + " is not a pendant");
    if (g.role(g.neighbors(v).front()) != Role::Interior)
      throw PreconditionError("boundary vertex " + std::to_string(v) + " is adjacent to a boundary vertex");
  }
}

}  // namespace

bool is_mu_pair(int a, int b, int s, int chi, int n, const Rational& mu) {
  if (a < 0 || b < 0 || s < 0) return false;
  const int size = a + b;
  if (size < 1 || 2 * size > chi + n) return false;
  if (s < 1 || Rational(s) > mu * size) return false;
  return b >= a + s - 2;
}

MuPairBound xyz_bound(int chi, int n, int a, int b, int s) {
  require_valid_parameters(chi, n);
  if (a < 0 || a > n || b < 0 || b > chi || s < 0)
    throw PreconditionError("xyz_bound needs 0 <= a <= n, 0 <= b <= chi and s >= 0");
  const auto c3 = static_cast<unsigned long>(3 * chi);
  const auto b3 = static_cast<unsigned long>(3 * b);
  MuPairBound out;
  out.x = Rational(1, 1) / Rational(binomial(c3, b3));
  const YShape ys = y_shape(chi, n, a, b, s);
  if (ys.admissible) {
    BigInt num = pow2(s) * factorial(static_cast<unsigned long>(ys.m));
    BigInt den = factorial(static_cast<unsigned long>(s)) * factorial(static_cast<unsigned long>(ys.p)) *
                 factorial(static_cast<unsigned long>(ys.q));
    out.y = Rational(num, den);
    out.y.canonicalize();
  } else {
    out.y = 0;
  }
  out.z = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(a)) *
                   binomial(static_cast<unsigned long>(chi), static_cast<unsigned long>(b)));
  out.product = out.x * out.y * out.z;
  return out;
}

std::vector<MuPairTerm> mu_pair_terms(int chi, int n, const Rational& mu) {
  require_valid_parameters(chi, n);
  std::vector<MuPairTerm> terms;
  for_each_mu_pair(chi, n, mu, [&](int a, int b, int s) { terms.push_back({a, b, s, xyz_bound(chi, n, a, b, s)}); });
  return terms;
}

Rational mu_pair_sum(int chi, int n, const Rational& mu) {
  require_valid_parameters(chi, n);
  // Each product times (3chi)! is the integer
  //   (3b)! (3chi-3b)! 2^s [M! / (s! p! q!)] C(n,a) C(chi,b),
  // the bracket being a multinomial coefficient since s + p + q = M.
  const FactorialTable fact(static_cast<unsigned long>(3 * chi));
  BigInt total = 0;
  BigInt multinomial;
  for_each_mu_pair(chi, n, mu, [&](int a, int b, int s) {
    const YShape ys = y_shape(chi, n, a, b, s);
    if (!ys.admissible) return;
    multinomial = fact(static_cast<unsigned long>(ys.m));
    mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(), fact(static_cast<unsigned long>(s)).get_mpz_t());
    mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(), fact(static_cast<unsigned long>(ys.p)).get_mpz_t());
    mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(), fact(static_cast<unsigned long>(ys.q)).get_mpz_t());
    BigInt term = fact(static_cast<unsigned long>(3 * b)) * fact(static_cast<unsigned long>(3 * chi - 3 * b));
    term *= multinomial;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    term *= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(a));
    term *= binomial(static_cast<unsigned long>(chi), static_cast<unsigned long>(b));
    total += term;
  });
  Rational sum(total, fact(static_cast<unsigned long>(3 * chi)));
  sum.canonicalize();
  return sum;
}

std::map<CountKey, BigInt> count_Nabs_table(const MultiGraph& g, int max_b, SubsetClass cls, int guard) {
  std::map<CountKey, BigInt> table;
  if (!is_connected(g)) return table;
  require_pendant_structure(g);
  const auto inner = g.interior_vertices();
  if (static_cast<int>(inner.size()) > guard)
    throw GuardExceeded("subset count: " + std::to_string(inner.size()) + " interior vertices exceeds guard " +
                        std::to_string(guard));

  if (cls == SubsetClass::All && g.boundary_count() > 0 && g.vertex_count() > 1)
    table[{1, 0, 1}] = g.boundary_count();
  if (max_b < 1 || inner.empty()) return table;

  // A connected Omega with b >= 1 is a connected interior set C plus any
  // subset of the pendants hanging off C; each included pendant removes one
  // edge from the boundary of C.
  const auto lg = detail::make_local(g, inner);
  std::vector<int> pendants(static_cast<std::size_t>(lg.size()), 0);
  for (int i = 0; i < lg.size(); ++i)
    for (int u : g.neighbors(lg.vertices[i]))
      if (g.role(u) == Role::Boundary) ++pendants[i];

  std::vector<std::vector<BigInt>> choose(1);
  auto binom_row = [&](int p) -> const std::vector<BigInt>& {
    while (static_cast<int>(choose.size()) <= p) {
      const int r = static_cast<int>(choose.size());
      std::vector<BigInt> row(static_cast<std::size_t>(r) + 1);
      for (int k = 0; k <= r; ++k) row[k] = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k));
      choose.push_back(std::move(row));
    }
    return choose[p];
  };
  choose[0] = {BigInt(1)};

  detail::for_each_connected_set(lg, max_b, [&](detail::Mask set, int size, int boundary) {
    int p = 0;
    for (detail::Mask m = set; m; m &= m - 1) p += pendants[std::countr_zero(m)];
    if (cls == SubsetClass::PendantClosed) {
      table[{p, size, boundary - p}] += 1;
      return;
    }
    const auto& row = binom_row(p);
    for (int a = 0; a <= p; ++a) table[{a, size, boundary - a}] += row[a];
  });
  return table;
}

BigInt count_Nabs(const MultiGraph& g, int a, int b, int s, SubsetClass cls, int guard) {
  if (a < 0 || b < 0 || s < 0) return 0;
  const auto table = count_Nabs_table(g, b, cls, guard);
  const auto it = table.find({a, b, s});
  return it == table.end() ? BigInt(0) : it->second;
}

Rational exact_first_moment(int chi, int n, int a, int b, int s, SubsetClass cls) {
  BigInt total = 0;
  enumerate_family(chi, n, [&](const HalfEdgePairing& p) {
    total += count_Nabs(build_graph(p), a, b, s, cls);
    return true;
  });
  Rational mean(total, count_family(chi, n));
  mean.canonicalize();
  return mean;
}

AuditReport audit_first_moment(int chi, int n, int a, int b, int s, std::uint64_t trials, std::uint64_t seed,
                               SubsetClass cls) {
  const SampleConfig cfg{chi, n, trials, seed};
  cfg.validate();
  AuditReport rep;
  rep.chi = chi;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.s = s;
  rep.trials = trials;
  rep.seed = seed;
  rep.cls = cls;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double c = to_double(Rational(count_Nabs(build_graph(sample_partition(cfg, t)), a, b, s, cls)));
    sum += c;
    sum_sq += c * c;
  }
  const double nt = static_cast<double>(trials);
  rep.estimate = sum / nt;
  const double var = trials > 1 ? std::max(0.0, (sum_sq - nt * rep.estimate * rep.estimate) / (nt - 1.0)) : 0.0;
  const double half = 1.959963984540054 * std::sqrt(var / nt);
  rep.ci_low = rep.estimate - half;
  rep.ci_high = rep.estimate + half;
  rep.bound = xyz_bound(chi, n, a, b, s).product;
  rep.bound_float = to_double(rep.bound);
  rep.pass = rep.ci_low <= rep.bound_float;
  return rep;
}

}  // namespace expander_forge
