// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ihara/census.hpp"
#include "ihara/chebyshev.hpp"
#include "ihara/error.hpp"
#include "ihara/generators.hpp"
#include "ihara/hk.hpp"
#include "ihara/ramanujan.hpp"
#include "ihara/spectral.hpp"
#include "ihara/zeta.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ihara;
using ihara::support::Fixture;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            detail << "first failure: " << why << "; ";
        }
        pass = pass && ok;
    }
};

struct Prepared {
    Fixture fixture;
    Multigraph g;
    GraphProfile profile;
    GraphParameters params;
    Spectrum spectrum;
    NontrivialSpectrum ns;
};

Prepared prepare(const Fixture& f) {
    auto g = support::load(f);
    auto p = profile(g);
    auto params = parameters(g, p);
    auto s = graph_spectrum(g);
    auto ns = nontrivial_spectrum(s, p);
    return {f, std::move(g), p, params, std::move(s), std::move(ns)};
}

const Fixture& fixture(const std::string& spec) {
    for (const auto& f : support::all_fixtures()) {
        if (f.spec == spec) {
            return f;
        }
    }
    throw std::logic_error("no fixture " + spec);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// Route agreement, k = 1..40, under 30 s.
Outcome route_agreement() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    const int K = 40;
    for (const auto& f : support::route_fixtures()) {
        const auto p = prepare(f);
        const auto census = cycle_census(p.g, K);
        const std::vector<HkSequence> routes = {
            hk_spectral(scaled_spectrum(p.ns), p.params, K), hk_from_nk(census.geodesic, p.params, K),
            hk_from_ck(census.closed_walks, p.params, K), hk_series(xi_rational(p.ns, K), p.params, K)};
        for (std::size_t i = 0; i < routes.size(); ++i) {
            for (std::size_t j = i + 1; j < routes.size(); ++j) {
                const double d = max_relative_difference(routes[i], routes[j]);
                worst = std::max(worst, d);
                o.require(d <= 1e-6, f.spec + " " + std::string(to_string(routes[i].route)) + " vs " +
                                         std::string(to_string(routes[j].route)) + " = " + sci(d));
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < 30.0, "runtime " + std::to_string(seconds) + " s");
    o.detail << "max pairwise relative difference " << sci(worst) << " over 8 fixtures, k<=40, " << sci(seconds)
             << " s";
    return o;
}

// Geodesic-cycle oracle on fixtures with n <= 12, k <= 8.
Outcome geodesic_oracle() {
    Outcome o;
    int checks = 0;
    for (const auto& f : support::small_fixtures(12)) {
        const auto p = prepare(f);
        const auto c = closed_walk_counts(p.g, 8);
        const auto op = geodesic_cycles_operator(p.g, 8);
        for (int k = 1; k <= 8; ++k) {
            const BigInt brute = geodesic_cycles_bruteforce(p.g, k);
            const BigInt lemma = nk_from_ck(c, f.q, f.n, k);
            BigInt rounded = -1;
            try {
                rounded = round_count(nk_from_spectrum(p.spectrum, f.q, f.n, k));
            } catch (const Error& e) {
                o.require(false, f.spec + " rounding: " + e.what());
            }
            const std::string at = f.spec + " k=" + std::to_string(k);
            o.require(brute == op[k - 1], at + " brute != trace(B^k)");
            o.require(brute == lemma, at + " brute != lemma");
            o.require(brute == rounded, at + " brute != rounded spectral");
            ++checks;
        }
        o.require(op[1] == 0, f.spec + " N_2 != 0");
    }
    auto n_at = [](const std::string& spec, int k) {
        return geodesic_cycles_bruteforce(generate_from_spec(spec), k);
    };
    o.require(n_at("complete:4", 3) == 24, "N_3(K4)");
    o.require(n_at("petersen", 5) == 120, "N_5(petersen)");
    o.require(n_at("cycle:5", 5) == 10, "N_5(cycle 5)");
    o.detail << checks << " (fixture, k) pairs exact; N_3(K4)=24, N_5(petersen)=120, N_5(C5)=10, N_2=0";
    return o;
}

// Functional equation at 100 seeded points per fixture.
Outcome functional_equation() {
    Outcome o;
    double worst = 0.0;
    int retried = 0;
    for (const auto& f : support::all_fixtures()) {
        const auto p = prepare(f);
        const auto sweep = functional_equation_sweep(p.ns, kDefaultSeed, 100, 10);
        worst = std::max(worst, sweep.max_residual);
        retried += sweep.retried;
        o.require(sweep.evaluated == 100 && sweep.skipped == 0, f.spec + " only " + std::to_string(sweep.evaluated) + " points evaluated");
        o.require(sweep.max_residual < 1e-8,
                  f.spec + " u=" + std::to_string(sweep.worst_point) + " residual " + sci(sweep.max_residual));
    }
    o.detail << "max residual " << sci(worst) << " at 100 points x " << support::all_fixtures().size()
             << " fixtures (" << retried << " near-pole points re-expanded with more digits)";
    return o;
}

// Ramanujan graphs keep h_k >= -1e-8 to k = 100; prisms go negative at an even k <= 60.
Outcome sign_criterion() {
    Outcome o;
    for (const std::string spec : {"petersen", "kmm:3", "complete:4", "hypercube:3"}) {
        const auto p = prepare(fixture(spec));
        o.require(ramanujan_spectral(p.ns).is_ramanujan, spec + " not Ramanujan by spectrum");
        const auto census = cycle_census(p.g, 100);
        const std::vector<HkSequence> routes = {
            hk_spectral(scaled_spectrum(p.ns), p.params, 100), hk_from_nk(census.geodesic, p.params, 100),
            hk_series(xi_rational(p.ns, 100), p.params, 100)};
        for (const auto& seq : routes) {
            for (int k = 1; k <= 100; ++k) {
                o.require(seq.h(k) >= -1e-8, spec + " " + std::string(to_string(seq.route)) + " h_" +
                                                 std::to_string(k) + " = " + sci(seq.h(k)));
            }
        }
    }
    for (const std::string spec : {"prism:24", "prism:30"}) {
        const auto p = prepare(fixture(spec));
        const auto census = cycle_census(p.g, 60);
        const auto h = hk_from_nk(census.geodesic, p.params, 60);
        int first = 0;
        for (int k = 2; k <= 60 && first == 0; k += 2) {
            if (h.h(k) < -1e-8) {
                first = k;
            }
        }
        o.require(first != 0, spec + " has no negative even h_k up to 60");
        o.detail << spec << " first negative even h_k at k=" << first << "; ";
    }
    o.detail << "4 Ramanujan fixtures nonnegative to k=100 on three routes";
    return o;
}

// Even-k eigenvalue bound whenever h_k >= 0.
Outcome even_k_bounds() {
    Outcome o;
    int used = 0;
    for (const auto& f : support::all_fixtures()) {
        const auto p = prepare(f);
        const auto h = hk_spectral(scaled_spectrum(p.ns), p.params, 40);
        const double max_abs = *ramanujan_spectral(p.ns).max_nontrivial_abs;
        for (int k = 2; k <= 40; k += 2) {
            if (h.h(k) >= 0.0) {
                const double bound = even_k_bound(k, f.n, f.q, f.bipartite);
                o.require(max_abs <= bound + 1e-9, f.spec + " k=" + std::to_string(k));
                ++used;
            }
        }
    }
    o.detail << used << " (fixture, even k) pairs with h_k >= 0 checked";
    return o;
}

// Hasse-Weil inequalities.
Outcome hasse_weil() {
    Outcome o;
    for (const auto& f : support::all_fixtures()) {
        if (!f.ramanujan) {
            continue;
        }
        const auto p = prepare(f);
        const auto report = hasse_weil_check(cycle_census(p.g, 40).geodesic, p.params, 40);
        o.require(report.all_satisfied(), f.spec + " violates at k=" + std::to_string(report.first_violation().value_or(0)));
    }
    const auto k33 = prepare(fixture("kmm:3"));
    const auto boundary = hasse_weil_check(cycle_census(k33.g, 2).geodesic, k33.params, 2);
    o.require(boundary.records.size() == 1 && boundary.records[0].lhs == 16 && boundary.records[0].rhs == 16.0 &&
                  boundary.records[0].satisfied,
              "K33 k=2 boundary");
    const auto prism = prepare(fixture("prism:24"));
    const auto violated = hasse_weil_check(cycle_census(prism.g, 60).geodesic, prism.params, 60);
    o.require(violated.first_violation().has_value(), "prism:24 has no violation by 60");
    o.detail << "Ramanujan fixtures hold to k=40; K33 k=2 lhs=rhs=16; prism:24 first violation at k="
             << violated.first_violation().value_or(0);
    return o;
}

// Estimator on prism:24 at K = 100.
Outcome estimator() {
    Outcome o;
    const auto p = prepare(fixture("prism:24"));
    const auto h = hk_from_nk(cycle_census(p.g, 100).geodesic, p.params, 100);
    const double target = (2 * std::cos(std::numbers::pi / 12) + 1) / std::sqrt(2.0);
    try {
        const auto e = estimate_max_eigenvalue(h);
        const double err = std::abs(e.estimate - target);
        o.require(err < 1e-3, "error " + sci(err));
        o.detail << "estimate " << e.estimate << " vs " << target << ", error " << sci(err) << ", k_used "
                 << e.k_used;
    } catch (const Error& e) {
        o.require(false, e.what());
    }
    return o;
}

// Chebyshev identity suite on the stated grids.
Outcome chebyshev_identities() {
    Outcome o;
    int checks = 0;
    for (double x : {0.5, 1.3, -2.0, 3.0}) {
        for (int k = 0; k <= 30; ++k, ++checks) {
            const double scale = std::pow(std::abs(x), k) + std::pow(std::abs(x), -k);
            o.require(std::abs(chebyshev_T(k, x + 1 / x) - (std::pow(x, k) + std::pow(x, -k))) < 1e-8 * scale,
                      "reciprocal x=" + std::to_string(x) + " k=" + std::to_string(k));
        }
    }
    for (double t : {0.0, std::numbers::pi / 7, std::numbers::pi / 3, 2.1}) {
        for (int k = 0; k <= 50; ++k, ++checks) {
            o.require(std::abs(chebyshev_T(k, 2 * std::cos(t)) - 2 * std::cos(k * t)) < 1e-9,
                      "cosine t=" + std::to_string(t) + " k=" + std::to_string(k));
        }
    }
    for (double x : {0.7, -0.7, 2.5, -2.5}) {
        for (int k = 0; k <= 25; ++k, ++checks) {
            double alternating = 0.0;
            for (int i = 0; i <= k / 2; ++i) {
                const auto c = support::pascal_binomial(k - i, i) + support::pascal_binomial(k - i - 1, i - 1);
                alternating += (i % 2 == 0 ? 1.0 : -1.0) * c.convert_to<double>() * std::pow(x, k - 2 * i);
            }
            const double h = x / 2;
            double half = 0.0;
            for (int i = 0; 2 * i <= k; ++i) {
                half += support::pascal_binomial(k, 2 * i).convert_to<double>() * std::pow(1 - 1 / (h * h), i);
            }
            half *= 2 * std::pow(h, k);
            const double t = chebyshev_T(k, x);
            const double scale = std::max(1.0, std::pow(std::abs(x), k));
            o.require(std::abs(t - alternating) <= 1e-9 * scale, "binomial x=" + std::to_string(x) + " k=" + std::to_string(k));
            o.require(std::abs(t - half) <= 1e-9 * std::max(scale, std::abs(half)),
                      "half-argument x=" + std::to_string(x) + " k=" + std::to_string(k));
        }
    }
    for (int i = 0; i <= 400; ++i) {
        const double s = -2.0 + 4.0 * i / 400;
        const auto t = chebyshev_T_sequence(100, s);
        for (int k = 0; k <= 100; ++k, ++checks) {
            o.require(std::abs(t[k]) <= 2 + 1e-9, "bounded s=" + std::to_string(s) + " k=" + std::to_string(k));
        }
    }
    for (double s : {2.01, -2.01, 3.0, -3.0}) {
        for (int k = 0; k <= 100; k += 2, ++checks) {
            o.require(chebyshev_T(k, s) > 0.0, "positive s=" + std::to_string(s) + " k=" + std::to_string(k));
        }
    }
    o.detail << checks << " identity evaluations (reciprocal, cosine, binomial, half-argument, bounded, positive)";
    return o;
}

// h_k ceiling on Ramanujan fixtures.
Outcome hk_ceiling() {
    Outcome o;
    for (const auto& f : support::all_fixtures()) {
        if (!f.ramanujan) {
            continue;
        }
        const auto p = prepare(f);
        const auto census = cycle_census(p.g, 100);
        o.require(hk_upper_check(hk_from_nk(census.geodesic, p.params, 100)), f.spec + " integer route");
        o.require(hk_upper_check(hk_spectral(scaled_spectrum(p.ns), p.params, 100)), f.spec + " spectral route");
    }
    const auto k33 = prepare(fixture("kmm:3"));
    const auto h = hk_from_nk(cycle_census(k33.g, 2).geodesic, k33.params, 2);
    o.require(h.h(2) == 16.0, "K33 h_2 = " + std::to_string(h.h(2)));
    o.detail << "7 Ramanujan fixtures below 4(n-1) / 4(n-2) to k=100; K33 h_2 = 16";
    return o;
}

// Zeta series reproduces N_k; zeta inverse degree and constant term.
Outcome zeta_consistency() {
    Outcome o;
    double worst = 0.0;
    for (const auto& f : support::all_fixtures()) {
        const auto p = prepare(f);
        const auto z = zeta_inverse(p.spectrum, f.q, f.n, 10);
        o.require(z.degree() == f.n * (f.q + 1), f.spec + " degree " + std::to_string(z.degree()));
        o.require(z.coefficient(0) == 1, f.spec + " constant term");
        const auto check = log_series_zeta_check(cycle_census(p.g, 10), z, 10);
        for (double r : check.residuals) {
            worst = std::max(worst, r);
        }
        o.require(check.passed && check.residuals.size() == 10, f.spec + " series check");
    }
    o.detail << "max relative residual " << sci(worst) << " for k<=10 on " << support::all_fixtures().size()
             << " fixtures";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"route agreement", route_agreement},
        {"geodesic-cycle oracle", geodesic_oracle},
        {"functional equation", functional_equation},
        {"h_k sign criterion", sign_criterion},
        {"even-k eigenvalue bound", even_k_bounds},
        {"Hasse-Weil inequalities", hasse_weil},
        {"eigenvalue estimator", estimator},
        {"Chebyshev identities", chebyshev_identities},
        {"h_k upper bound", hk_ceiling},
        {"zeta consistency", zeta_consistency},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] criterion %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
