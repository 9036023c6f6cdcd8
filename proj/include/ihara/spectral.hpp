#pragma once

#include <vector>

#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"

namespace ihara {

// Eigenvalues of the adjacency matrix with multiplicity, sorted descending.
struct Spectrum {
    std::vector<double> values;
};

// Spec(X) with q+1 removed, and also -(q+1) when the graph is bipartite.
struct NontrivialSpectrum {
    std::vector<double> values;
    int q = 0;
    bool bipartite = false;
};

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiSweepCap = 100;

// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
// tol * ||m||_F. Throws NonSymmetric, or SweepCapExceeded after 100 sweeps.
Spectrum eigenvalues_symmetric(const Matrix<double>& m, double tol = kJacobiTolerance);

Spectrum graph_spectrum(const Multigraph& g);

// Removes the eigenvalue nearest q+1 (and nearest -(q+1) when bipartite).
// Throws TrivialEigenvalueMissing when the nearest candidate is further than
// 1e-6 * (q+1) away.
NontrivialSpectrum nontrivial_spectrum(const Spectrum& s, const GraphProfile& p);

// q^{-1/2} * Spec*(X), order preserved.
std::vector<double> scaled_spectrum(const NontrivialSpectrum& ns);

} // namespace ihara
