#include "ihara/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ihara/error.hpp"

namespace ihara {
namespace {

double off_diagonal_mass(const Matrix<double>& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(sum);
}

double frobenius(const Matrix<double>& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p, r) with a rotation applied from both sides.
void rotate(Matrix<double>& a, std::size_t p, std::size_t r) {
    const double apr = a(p, r);
    if (apr == 0.0) {
        return;
    }
    const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akr = a(k, r);
        a(k, p) = c * akp - s * akr;
        a(k, r) = s * akp + c * akr;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double ark = a(r, k);
        a(p, k) = c * apk - s * ark;
        a(r, k) = s * apk + c * ark;
    }
    a(p, r) = 0.0;
    a(r, p) = 0.0;
}

std::size_t nearest_index(const std::vector<double>& values, double target) {
    const auto it = std::min_element(values.begin(), values.end(), [target](double a, double b) {
        return std::abs(a - target) < std::abs(b - target);
    });
    return static_cast<std::size_t>(std::distance(values.begin(), it));
}

} // namespace

Spectrum eigenvalues_symmetric(const Matrix<double>& m, double tol) {
    if (!m.square()) {
        throw NonSymmetric("eigenvalues_symmetric needs a square matrix");
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m(i, j) != m(j, i)) {
                throw NonSymmetric("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }

    Matrix<double> a = m;
    const double scale = frobenius(a);
    const double target = tol * (scale > 0.0 ? scale : 1.0);
    int sweeps = 0;
    double residual = off_diagonal_mass(a);
    while (residual >= target) {
        if (sweeps == kJacobiSweepCap) {
            throw SweepCapExceeded(sweeps, residual);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                rotate(a, p, r);
            }
        }
        ++sweeps;
        residual = off_diagonal_mass(a);
    }

    Spectrum s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.values.push_back(a(i, i));
    }
    std::stable_sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

Spectrum graph_spectrum(const Multigraph& g) {
    return eigenvalues_symmetric(adjacency_matrix(g).cast<double>());
}

NontrivialSpectrum nontrivial_spectrum(const Spectrum& s, const GraphProfile& p) {
    const double trivial = p.q + 1.0;
    const double match_tol = 1e-6 * trivial;
    NontrivialSpectrum ns{s.values, p.q, p.bipartite};

    auto remove_nearest = [&](double target) {
        if (ns.values.empty()) {
            throw TrivialEigenvalueMissing("spectrum is empty");
        }
        const std::size_t i = nearest_index(ns.values, target);
        if (std::abs(ns.values[i] - target) > match_tol) {
            throw TrivialEigenvalueMissing("no eigenvalue within " + std::to_string(match_tol) + " of " +
                                           std::to_string(target) + " (nearest " + std::to_string(ns.values[i]) +
                                           ")");
        }
        ns.values.erase(ns.values.begin() + static_cast<std::ptrdiff_t>(i));
    };
    remove_nearest(trivial);
    if (p.bipartite) {
        remove_nearest(-trivial);
    }
    return ns;
}

std::vector<double> scaled_spectrum(const NontrivialSpectrum& ns) {
    const double root_q = std::sqrt(static_cast<double>(ns.q));
    std::vector<double> out;
    out.reserve(ns.values.size());
    for (double v : ns.values) {
        out.push_back(v / root_q);
    }
    return out;
}

} // namespace ihara
