#pragma once

// Normalized Laplacian and Steklov spectra of model graphs.
//
// Laplacian: eigenvalues of I - D^{-1/2} A D^{-1/2}, where A counts edge
// multiplicity and a loop adds 2 to its diagonal entry (and to the degree).
//
// Steklov: eigenvalues of the Dirichlet-to-Neumann map on the boundary
// vertices, i.e. the Schur complement L_BB - L_BI L_II^{-1} L_IB of the
// combinatorial Laplacian L = D - A with interior (I) and boundary (B)
// blocks. Harmonic at interior vertices is (Lf)_I = 0, and at a boundary
// vertex x with neighbour y, (Lf)(x) = f(x) - f(y) is the outward derivative.

#include <optional>
#include <span>
#include <vector>

#include "expander_forge/graph.hpp"

namespace expander_forge {

inline constexpr double kDefaultTol = 1e-9;

/// Largest vertex count handled by the dense eigensolver; above it only
/// lambda1 is computed, iteratively.
inline constexpr int kDenseVertexLimit = 2000;

struct LaplacianSpectrum {
  std::vector<double> eigenvalues;  // ascending; empty when computed iteratively
  double lambda1 = 0.0;
  double tol = kDefaultTol;
  bool dense = true;
};

struct SteklovSpectrum {
  std::vector<double> eigenvalues;  // ascending, one per boundary vertex
  std::optional<double> sigma1;     // absent with a single boundary vertex
  double tol = kDefaultTol;
};

struct SpectralReport {
  int chi = 0;
  int n = 0;
  int genus = 0;
  bool connected = false;
  std::vector<double> lambda;
  std::vector<double> sigma;  // empty unless connected with n >= 1
  double lambda1 = 0.0;
  std::optional<double> sigma1;
  double tol = kDefaultTol;
};

/// Throws PreconditionError if some vertex has degree 0 or |V| < 2.
LaplacianSpectrum laplacian_spectrum(const MultiGraph& g, double tol = kDefaultTol);

/// lambda1 by restarted Lanczos on D^{-1/2} A D^{-1/2} with the constant
/// mode deflated. Optionally returns the eigenvector of the normalized
/// Laplacian.
double lambda1_iterative(const MultiGraph& g, double tol = kDefaultTol, std::vector<double>* eigenvector = nullptr);

/// Eigenvector for lambda1 of the normalized Laplacian, mapped back by
/// D^{-1/2} so that it orders vertices for a sweep cut.
std::vector<double> fiedler_vector(const MultiGraph& g);

/// Throws PreconditionError for disconnected input, no boundary vertex or no
/// interior vertex; InternalInconsistency if the interior block is not
/// positive definite or sigma1 vanishes.
SteklovSpectrum steklov_spectrum(const MultiGraph& g, double tol = kDefaultTol);

/// Both spectra plus topology. Steklov data is filled only when the graph is
/// connected with at least one boundary vertex.
SpectralReport spectral_report(const MultiGraph& g, double tol = kDefaultTol);

[[noreturn]] void throw_rayleigh_precondition(const char* what);

/// Sum over edges of (f(u) - f(v))^2 divided by the sum over boundary
/// vertices of f^2. Loops contribute nothing. Throws PreconditionError when
/// the boundary norm is zero or f does not have one value per vertex.
template <class Scalar>
Scalar rayleigh_quotient(const MultiGraph& g, std::span<const Scalar> f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) throw_rayleigh_precondition("one value per vertex expected");
  Scalar num = 0;
  for (const Edge& e : g.edges()) {
    const Scalar d = f[e.u] - f[e.v];
    num += d * d;
  }
  Scalar den = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.role(v) == Role::Boundary) den += f[v] * f[v];
  if (den == 0) throw_rayleigh_precondition("zero boundary norm");
  return num / den;
}

struct DominationReport {
  bool holds = true;
  std::vector<double> lambda;  // first |boundary| Laplacian eigenvalues
  std::vector<double> sigma;
  int worst_index = -1;        // index of the smallest sigma_i - lambda_i
  double worst_margin = 0.0;
};

/// Checks sigma_i >= lambda_i - tol for 0 <= i < |boundary|. Same
/// preconditions as steklov_spectrum.
DominationReport verify_domination(const MultiGraph& g, double tol = kDefaultTol);

}  // namespace expander_forge
