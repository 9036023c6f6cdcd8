#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ihara/census.hpp"
#include "ihara/polynomial.hpp"
#include "ihara/spectral.hpp"

namespace ihara {

inline constexpr int kDefaultHorizon = 50;

// Z(u)^{-1} = (1-u^2)^{n(q-1)/2} prod_{lambda in Spec(X)} (1 - lambda u + q u^2),
// degree n(q+1), constant term 1. Precision is sized for log-derivative series
// up to `horizon` terms.
RealPolynomial zeta_inverse(const Spectrum& s, int q, int n, int horizon = kDefaultHorizon);

// Xi(u) = prod_{lambda in Spec*} (1 - lambda u + q u^2) / (1 - q^{1/2} u)^{2 |Spec*|}.
RationalFunction xi_rational(const NontrivialSpectrum& ns, int horizon = kDefaultHorizon);
RationalFunction xi_rational_at(const NontrivialSpectrum& ns, unsigned digits);

// Xi(u) = Z(u)^{-1} / F(u), with F the trivial-pole prefactor
//   nonbipartite: (1-u)(1-qu)(1-q^{1/2}u)^{2n-2}(1-u^2)^{n(q-1)/2}
//   bipartite:    (1-q^2u^2)(1-q^{1/2}u)^{2n-4}(1-u^2)^{n(q-1)/2+1}
RationalFunction xi_from_zeta(const RealPolynomial& zeta_inv, int q, int n, bool bipartite);

// |Xi(1/(qu)) - Xi(u)| / max(1, |Xi(u)|). Throws DomainError for u = 0 and
// PoleHit when either point is a pole.
double functional_equation_residual(const RationalFunction& xi, int q, double u);

// Points drawn uniformly from [-0.9, -0.1] U [0.1, 0.9] by a 64-bit Mersenne
// twister; the mapping from raw draws is fixed so the points are portable.
inline constexpr std::uint64_t kDefaultSeed = 42;

class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : gen_(seed) {}
    double next();

private:
    std::mt19937_64 gen_;
};

std::vector<double> sample_points(std::uint64_t seed, int count);

struct FunctionalEquationSweep {
    double max_residual = 0.0;
    double worst_point = 0.0;
    int evaluated = 0;
    // Draws that needed more than the base precision.
    int retried = 0;
    // Draws still inside the pole guard at the top of the precision ladder.
    int skipped = 0;
};

// Base precision, then doubled this many times minus one.
inline constexpr std::size_t kPrecisionLadder = 5;

// Draws seeded points until `count` of them evaluate (or 10 * count draws are
// spent) and keeps the worst residual. Xi is expanded at the series precision
// for `horizon` and re-expanded with more digits for draws near the pole.
FunctionalEquationSweep functional_equation_sweep(const NontrivialSpectrum& ns, std::uint64_t seed, int count,
                                                  int horizon = kDefaultHorizon);

// h_1..h_K from d/du ln Xi(q^{-1/2} u) = sum h_{k+1} u^k, by power-series
// log-differentiation of numerator and denominator. Throws ZeroAtOrigin, or
// InsufficientPrecision when `xi` was expanded for a shorter horizon.
std::vector<double> log_series(const RationalFunction& xi, int q, int K);

struct ZetaSeriesCheck {
    // Relative residual of the coefficient of u^k against N_{k+1}, k = 0..K-1.
    std::vector<double> residuals;
    bool passed = false;
};

// Checks that -d/du ln Z(u)^{-1} = sum_k N_{k+1} u^k to 1e-6 relative.
ZetaSeriesCheck log_series_zeta_check(const CycleCensus& census, const RealPolynomial& zeta_inv, int K);

} // namespace ihara
