#include "expander_forge/spectra.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <string>

#include "expander_forge/errors.hpp"
#include "expander_forge/rng.hpp"

namespace expander_forge {

namespace {

void require_no_isolated(const MultiGraph& g) {
  if (g.vertex_count() < 2) throw PreconditionError("Laplacian spectrum needs at least 2 vertices");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
}

Eigen::MatrixXd adjacency_dense(const MultiGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      a(e.u, e.u) += 2.0;
    } else {
      a(e.u, e.v) += 1.0;
      a(e.v, e.u) += 1.0;
    }
  }
  return a;
}

Eigen::MatrixXd normalized_laplacian(const MultiGraph& g) {
  const int nv = g.vertex_count();
  Eigen::VectorXd inv_sqrt(nv);
  for (int v = 0; v < nv; ++v) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  Eigen::MatrixXd l = -(inv_sqrt.asDiagonal() * adjacency_dense(g) * inv_sqrt.asDiagonal());
  l.diagonal().array() += 1.0;
  return l;
}

// D^{-1/2} A D^{-1/2} in compressed form.
Eigen::SparseMatrix<double> normalized_adjacency(const MultiGraph& g) {
  const int nv = g.vertex_count();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(2 * g.edges().size());
  auto w = [&](int u, int v) { return 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)); };
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      trip.emplace_back(e.u, e.u, 2.0 * w(e.u, e.u));
    } else {
      trip.emplace_back(e.u, e.v, w(e.u, e.v));
      trip.emplace_back(e.v, e.u, w(e.u, e.v));
    }
  }
  Eigen::SparseMatrix<double> m(nv, nv);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

// Largest eigenpair of `op` on the orthogonal complement of the unit vector
// `deflate`, by Lanczos with full reorthogonalization and explicit restarts
// from the current Ritz vector.
double top_eigenpair_deflated(const Eigen::SparseMatrix<double>& op, const Eigen::VectorXd& deflate, double tol,
                              Eigen::VectorXd& ritz) {
  const int dim = static_cast<int>(op.rows());
  const int steps = std::min(dim - 1, 80);
  auto project = [&](Eigen::VectorXd& x) { x -= deflate.dot(x) * deflate; };

  Rng rng(0x9d3f1a7c5e2b4086ULL);
  Eigen::VectorXd start(dim);
  for (int i = 0; i < dim; ++i) start[i] = rng.normal();
  project(start);

  double theta = 0.0;
  constexpr int kMaxRestarts = 500;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    Eigen::MatrixXd q(dim, steps);
    Eigen::VectorXd alpha(steps);
    Eigen::VectorXd beta(steps);
    q.col(0) = start.normalized();
    int used = 0;
    double tail = 0.0;
    for (int j = 0; j < steps; ++j) {
      Eigen::VectorXd w = op * q.col(j);
      project(w);
      alpha[j] = q.col(j).dot(w);
      for (int pass = 0; pass < 2; ++pass) w -= q.leftCols(j + 1) * (q.leftCols(j + 1).transpose() * w);
      project(w);
      used = j + 1;
      tail = w.norm();
      if (j + 1 == steps || tail < 1e-13) break;
      beta[j] = tail;
      q.col(j + 1) = w / tail;
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(used, used);
    for (int j = 0; j < used; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < used) t(j, j + 1) = t(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
    theta = small.eigenvalues()[used - 1];
    const Eigen::VectorXd y = small.eigenvectors().col(used - 1);
    ritz = q.leftCols(used) * y;
    const double residual = std::abs(tail * y[used - 1]);
    if (residual <= std::max(tol, 1e-12) || tail < 1e-13) return theta;
    start = ritz;
  }
  throw InternalInconsistency("Lanczos iteration for lambda1 did not converge");
}

Eigen::VectorXd sqrt_degree_unit(const MultiGraph& g) {
  Eigen::VectorXd u(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) u[v] = std::sqrt(static_cast<double>(g.degree(v)));
  return u.normalized();
}

std::vector<double> to_std(const Eigen::VectorXd& x) { return {x.data(), x.data() + x.size()}; }

// Both operators are positive semidefinite; round-off just below zero is
// reported as zero.
void clamp_negative_round_off(std::vector<double>& values, double tol) {
  for (double& x : values)
    if (x < 0.0 && x >= -tol) x = 0.0;
}

}  // namespace

void throw_rayleigh_precondition(const char* what) { throw PreconditionError(std::string("rayleigh_quotient: ") + what); }

LaplacianSpectrum laplacian_spectrum(const MultiGraph& g, double tol) {
  require_no_isolated(g);
  LaplacianSpectrum out;
  out.tol = tol;
  if (g.vertex_count() > kDenseVertexLimit) {
    out.dense = false;
    out.lambda1 = lambda1_iterative(g, tol);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(normalized_laplacian(g), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InternalInconsistency("dense Laplacian eigensolver failed");
  out.eigenvalues = to_std(es.eigenvalues());
  clamp_negative_round_off(out.eigenvalues, tol);
  out.lambda1 = out.eigenvalues[1];
  return out;
}

double lambda1_iterative(const MultiGraph& g, double tol, std::vector<double>* eigenvector) {
  require_no_isolated(g);
  Eigen::VectorXd ritz;
  const double theta = top_eigenpair_deflated(normalized_adjacency(g), sqrt_degree_unit(g), tol, ritz);
  if (eigenvector) *eigenvector = to_std(ritz);
  return 1.0 - theta;
}

std::vector<double> fiedler_vector(const MultiGraph& g) {
  require_no_isolated(g);
  Eigen::VectorXd y;
  if (g.vertex_count() > kDenseVertexLimit) {
    top_eigenpair_deflated(normalized_adjacency(g), sqrt_degree_unit(g), kDefaultTol, y);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(normalized_laplacian(g));
    if (es.info() != Eigen::Success) throw InternalInconsistency("dense Laplacian eigensolver failed");
    y = es.eigenvectors().col(1);
  }
  std::vector<double> x(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) x[v] = y[v] / std::sqrt(static_cast<double>(g.degree(v)));
  return x;
}

SteklovSpectrum steklov_spectrum(const MultiGraph& g, double tol) {
  if (!is_connected(g)) throw PreconditionError("Steklov spectrum needs a connected graph");
  const auto inner = g.interior_vertices();
  const auto outer = g.boundary_vertices();
  if (outer.empty()) throw PreconditionError("Steklov spectrum needs at least one boundary vertex");
  if (inner.empty()) throw PreconditionError("Steklov spectrum needs at least one interior vertex");

  const int ni = static_cast<int>(inner.size());
  const int nb = static_cast<int>(outer.size());
  std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < ni; ++i) slot[inner[i]] = i;
  for (int i = 0; i < nb; ++i) slot[outer[i]] = i;

  // Blocks of L = D - A; loops cancel between D and A.
  std::vector<Eigen::Triplet<double>> ii;
  Eigen::MatrixXd ib = Eigen::MatrixXd::Zero(ni, nb);
  Eigen::MatrixXd bb = Eigen::MatrixXd::Zero(nb, nb);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double diag = g.degree(v) - 2.0 * g.loop_count(v);
    if (g.role(v) == Role::Interior)
      ii.emplace_back(slot[v], slot[v], diag);
    else
      bb(slot[v], slot[v]) += diag;
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const bool ui = g.role(e.u) == Role::Interior;
    const bool vi = g.role(e.v) == Role::Interior;
    if (ui && vi) {
      ii.emplace_back(slot[e.u], slot[e.v], -1.0);
      ii.emplace_back(slot[e.v], slot[e.u], -1.0);
    } else if (ui) {
      ib(slot[e.u], slot[e.v]) -= 1.0;
    } else if (vi) {
      ib(slot[e.v], slot[e.u]) -= 1.0;
    } else {
      bb(slot[e.u], slot[e.v]) -= 1.0;
      bb(slot[e.v], slot[e.u]) -= 1.0;
    }
  }
  Eigen::SparseMatrix<double> l_ii(ni, ni);
  l_ii.setFromTriplets(ii.begin(), ii.end());

  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> chol(l_ii);
  if (chol.info() != Eigen::Success) throw InternalInconsistency("interior Dirichlet block is not positive definite");
  const Eigen::MatrixXd solved = chol.solve(ib);
  if (chol.info() != Eigen::Success) throw InternalInconsistency("interior Dirichlet solve failed");

  Eigen::MatrixXd schur = bb - ib.transpose() * solved;
  schur = 0.5 * (schur + schur.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(schur, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InternalInconsistency("Steklov eigensolver failed");

  SteklovSpectrum out;
  out.tol = tol;
  out.eigenvalues = to_std(es.eigenvalues());
  clamp_negative_round_off(out.eigenvalues, tol);
  if (std::abs(out.eigenvalues[0]) > std::sqrt(tol))
    throw InternalInconsistency("Steklov spectrum lacks the constant mode");
  if (nb >= 2) {
    out.sigma1 = out.eigenvalues[1];
    if (*out.sigma1 <= tol) throw InternalInconsistency("sigma1 vanishes on a connected graph");
  }
  return out;
}

SpectralReport spectral_report(const MultiGraph& g, double tol) {
  const Topology topo = topology(g);
  SpectralReport r;
  r.chi = g.interior_count();
  r.n = g.boundary_count();
  r.genus = topo.genus;
  r.connected = topo.components == 1;
  r.tol = tol;
  const LaplacianSpectrum lap = laplacian_spectrum(g, tol);
  r.lambda = lap.eigenvalues;
  r.lambda1 = lap.lambda1;
  if (r.connected && r.n >= 1 && r.chi >= 1) {
    const SteklovSpectrum st = steklov_spectrum(g, tol);
    r.sigma = st.eigenvalues;
    r.sigma1 = st.sigma1;
  }
  return r;
}

DominationReport verify_domination(const MultiGraph& g, double tol) {
  const SteklovSpectrum st = steklov_spectrum(g, tol);
  if (g.vertex_count() > kDenseVertexLimit)
    throw PreconditionError("domination check needs the full Laplacian spectrum (at most " +
                            std::to_string(kDenseVertexLimit) + " vertices)");
  const LaplacianSpectrum lap = laplacian_spectrum(g, tol);
  DominationReport rep;
  rep.sigma = st.eigenvalues;
  rep.lambda.assign(lap.eigenvalues.begin(), lap.eigenvalues.begin() + static_cast<long>(rep.sigma.size()));
  for (std::size_t i = 0; i < rep.sigma.size(); ++i) {
    const double margin = rep.sigma[i] - rep.lambda[i];
    if (rep.worst_index < 0 || margin < rep.worst_margin) {
      rep.worst_index = static_cast<int>(i);
      rep.worst_margin = margin;
    }
  }
  rep.holds = rep.worst_margin >= -tol;
  return rep;
}

}  // namespace expander_forge
