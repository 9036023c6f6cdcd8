#include "ihara/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "ihara/error.hpp"

namespace ihara {
namespace {

RealPolynomial quadratic_factor(double lambda, int q, unsigned digits) {
    return RealPolynomial({Real(1, digits), make_real(-lambda, digits), Real(q, digits)});
}

// 1 - c u
RealPolynomial linear_factor(const Real& c) { return RealPolynomial({Real(1, c.precision()), -c}); }

Real root_q(int q, unsigned digits) { return sqrt(Real(q, digits)); }

void check_precision(const RealPolynomial& p, int K, const char* what) {
    const unsigned need = series_digits(static_cast<std::size_t>(std::max(p.degree(), 0)), K);
    if (p.precision() < need) {
        throw InsufficientPrecision(std::string(what) + " was expanded with " + std::to_string(p.precision()) +
                                    " digits; a series to " + std::to_string(K) + " terms needs " +
                                    std::to_string(need));
    }
}

} // namespace

RealPolynomial zeta_inverse(const Spectrum& s, int q, int n, int horizon) {
    const int degree = n * (q + 1);
    const unsigned digits = series_digits(static_cast<std::size_t>(degree), horizon);
    std::vector<RealPolynomial> factors;
    factors.reserve(s.values.size() + 1);
    for (double lambda : s.values) {
        factors.push_back(quadratic_factor(lambda, q, digits));
    }
    // n(q-1) is even for every regular graph: n(q+1) counts oriented edges.
    const unsigned exponent = static_cast<unsigned>(n * (q - 1) / 2);
    factors.push_back(RealPolynomial({Real(1, digits), Real(0, digits), Real(-1, digits)}).pow(exponent));
    return product(std::move(factors));
}

RationalFunction xi_rational(const NontrivialSpectrum& ns, int horizon) {
    return xi_rational_at(ns, series_digits(2 * ns.values.size(), horizon));
}

RationalFunction xi_rational_at(const NontrivialSpectrum& ns, unsigned digits) {
    const std::size_t degree = 2 * ns.values.size();
    std::vector<RealPolynomial> factors;
    factors.reserve(ns.values.size());
    for (double lambda : ns.values) {
        factors.push_back(quadratic_factor(lambda, ns.q, digits));
    }
    auto denominator = linear_factor(root_q(ns.q, digits)).pow(static_cast<unsigned>(degree));
    return {product(std::move(factors)), std::move(denominator)};
}

RationalFunction xi_from_zeta(const RealPolynomial& zeta_inv, int q, int n, bool bipartite) {
    const unsigned digits = zeta_inv.precision();
    const Real one(1, digits);
    const Real zero(0, digits);
    const auto one_minus_u_squared = RealPolynomial({one, zero, -one});
    const auto one_minus_root_q_u = linear_factor(root_q(q, digits));
    const unsigned half = static_cast<unsigned>(n * (q - 1) / 2);

    RealPolynomial prefactor;
    if (!bipartite) {
        prefactor = product({linear_factor(one), linear_factor(Real(q, digits)),
                             one_minus_root_q_u.pow(static_cast<unsigned>(2 * n - 2)), one_minus_u_squared.pow(half)});
    } else {
        const auto one_minus_q2_u2 = RealPolynomial({one, zero, -Real(q, digits) * q});
        prefactor = product({one_minus_q2_u2, one_minus_root_q_u.pow(static_cast<unsigned>(2 * n - 4)),
                             one_minus_u_squared.pow(half + 1)});
    }
    return {zeta_inv, std::move(prefactor)};
}

double functional_equation_residual(const RationalFunction& xi, int q, double u) {
    if (u == 0.0) {
        throw DomainError("functional equation needs u != 0");
    }
    const Real x = make_real(u, xi.precision());
    const Real mirrored = 1 / (x * q);
    const Real at_u = xi(x);
    const Real at_mirror = xi(mirrored);
    const Real scale = std::max(Real(1, xi.precision()), Real(abs(at_u)));
    return Real(abs(at_mirror - at_u) / scale).convert_to<double>();
}

double SampleStream::next() {
    const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    const bool negative = (gen_() >> 63) != 0;
    const double magnitude = 0.1 + 0.8 * unit;
    return negative ? -magnitude : magnitude;
}

std::vector<double> sample_points(std::uint64_t seed, int count) {
    SampleStream stream(seed);
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        points.push_back(stream.next());
    }
    return points;
}

FunctionalEquationSweep functional_equation_sweep(const NontrivialSpectrum& ns, std::uint64_t seed, int count,
                                                  int horizon) {
    // Near q^{-1/2} the expanded denominator cancels by ((1 + q^{1/2}|u|) / |1 - q^{1/2}u|)^deg,
    // so a draw that looks like a pole is retried with more digits before it is skipped.
    std::vector<RationalFunction> ladder{xi_rational(ns, horizon)};
    while (ladder.size() < kPrecisionLadder) {
        ladder.push_back(xi_rational_at(ns, 2 * ladder.back().precision()));
    }

    FunctionalEquationSweep sweep;
    SampleStream stream(seed);
    const int max_draws = 10 * std::max(count, 1);
    while (sweep.evaluated < count && sweep.evaluated + sweep.skipped < max_draws) {
        const double u = stream.next();
        bool done = false;
        for (std::size_t level = 0; level < ladder.size() && !done; ++level) {
            try {
                const double r = functional_equation_residual(ladder[level], ns.q, u);
                if (r > sweep.max_residual) {
                    sweep.max_residual = r;
                    sweep.worst_point = u;
                }
                ++sweep.evaluated;
                sweep.retried += level > 0 ? 1 : 0;
                done = true;
            } catch (const PoleHit&) {
            }
        }
        sweep.skipped += done ? 0 : 1;
    }
    return sweep;
}

std::vector<double> log_series(const RationalFunction& xi, int q, int K) {
    if (K <= 0) {
        return {};
    }
    check_precision(xi.numerator(), K, "numerator");
    check_precision(xi.denominator(), K, "denominator");
    const Real scale = 1 / root_q(q, xi.precision());
    const RationalFunction scaled = xi.scaled(scale);
    const auto num = log_derivative_series(scaled.numerator(), static_cast<std::size_t>(K));
    const auto den = log_derivative_series(scaled.denominator(), static_cast<std::size_t>(K));
    std::vector<double> h;
    h.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        h.push_back(Real(num[k] - den[k]).convert_to<double>());
    }
    return h;
}

ZetaSeriesCheck log_series_zeta_check(const CycleCensus& census, const RealPolynomial& zeta_inv, int K) {
    if (K > census.horizon) {
        throw DomainError("zeta series check to K = " + std::to_string(K) + " exceeds census horizon " +
                          std::to_string(census.horizon));
    }
    ZetaSeriesCheck check;
    check.passed = true;
    if (K <= 0) {
        return check;
    }
    check_precision(zeta_inv, K, "zeta inverse");
    const auto series = log_derivative_series(zeta_inv, static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const Real expected(census.N(k + 1).str(), zeta_inv.precision());
        const Real scale = std::max(Real(1, zeta_inv.precision()), Real(abs(expected)));
        const double residual = Real(abs(-series[k] - expected) / scale).convert_to<double>();
        check.residuals.push_back(residual);
        check.passed = check.passed && residual < 1e-6;
    }
    return check;
}

} // namespace ihara
