#include <cmath>

#include <gtest/gtest.h>

#include "ihara/census.hpp"
#include "ihara/chebyshev.hpp"
#include "ihara/error.hpp"
#include "ihara/generators.hpp"
#include "ihara/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ihara;
using ihara::support::all_fixtures;

namespace {

std::vector<BigInt> counts(const std::string& spec, int K) { return closed_walk_counts(generate_from_spec(spec), K); }

} // namespace

TEST(ClosedWalks, K4) {
    const auto c = counts("complete:4", 3);
    EXPECT_EQ(c, (std::vector<BigInt>{4, 0, 12, 24}));
}

TEST(ClosedWalks, FourCycleAndPetersen) {
    EXPECT_EQ(counts("cycle:4", 2)[2], 8);
    const auto p = counts("petersen", 2);
    EXPECT_EQ(p[0], 10);
    EXPECT_EQ(p[1], 0);
    EXPECT_EQ(p[2], 30);
}

TEST(ClosedWalks, MatchNaiveMatrixPowersAndEigenvalues) {
    for (const auto& f : all_fixtures()) {
        const auto g = support::load(f);
        const auto c = closed_walk_counts(g, 12);
        for (int k = 0; k <= 12; ++k) {
            EXPECT_EQ(c[k], support::trace_power(g, k)) << f.spec << " k=" << k;
        }
        EXPECT_EQ(c[0], f.n);
        EXPECT_EQ(c[1], 0);
        EXPECT_EQ(c[2], f.n * (f.q + 1));
        if (f.bipartite) {
            for (int k = 1; k <= 12; k += 2) {
                EXPECT_EQ(c[k], 0) << f.spec;
            }
        }
    }
    // K4: 3^k + 3(-1)^k
    const auto k4 = counts("complete:4", 30);
    for (int k = 0; k <= 30; ++k) {
        EXPECT_EQ(k4[k], ipow(3, k) + 3 * (k % 2 == 0 ? 1 : -1));
    }
}

TEST(ClosedWalks, RejectsEmptyHorizon) { EXPECT_THROW(counts("petersen", 0), DomainError); }

TEST(ClosedWalks, LoopsCountTwice) {
    const std::vector<EdgePair> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}, {1, 1}, {2, 2}, {3, 3}};
    const auto c = closed_walk_counts(build_graph(4, e), 1);
    EXPECT_EQ(c[1], 8);
}

TEST(NonBacktracking, RowSumsAreQ) {
    for (const auto& f : all_fixtures()) {
        const auto b = non_backtracking_operator(support::load(f));
        for (std::size_t r = 0; r < b.rows(); ++r) {
            int sum = 0;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                sum += b(r, c);
            }
            EXPECT_EQ(sum, f.q) << f.spec;
        }
    }
}

TEST(Geodesic, SpotValues) {
    EXPECT_EQ(geodesic_cycles_bruteforce(generate_from_spec("complete:4"), 3), 24u);
    EXPECT_EQ(geodesic_cycles_bruteforce(generate_from_spec("petersen"), 5), 120u);
    EXPECT_EQ(geodesic_cycles_bruteforce(generate_from_spec("cycle:5"), 5), 10u);
    EXPECT_EQ(geodesic_cycles_bruteforce(generate_from_spec("kmm:3"), 4), 72u);

    const auto k4 = geodesic_cycles_operator(generate_from_spec("complete:4"), 3);
    EXPECT_EQ(k4[2], 24);
    const auto petersen = geodesic_cycles_operator(generate_from_spec("petersen"), 4);
    EXPECT_EQ(petersen[2], 0);
    EXPECT_EQ(petersen[3], 0);
    EXPECT_EQ(geodesic_cycles_operator(generate_from_spec("kmm:3"), 4)[3], 72);
}

TEST(Geodesic, FourRoutesAgreeOnSmallFixtures) {
    for (const auto& f : support::small_fixtures(12)) {
        const auto g = support::load(f);
        const auto c = closed_walk_counts(g, 8);
        const auto op = geodesic_cycles_operator(g, 8);
        const auto spectrum = graph_spectrum(g);
        std::vector<support::Int> c_oracle(c.begin(), c.end());
        for (int k = 1; k <= 8; ++k) {
            const BigInt brute = geodesic_cycles_bruteforce(g, k);
            EXPECT_EQ(brute, op[k - 1]) << f.spec << " k=" << k;
            EXPECT_EQ(brute, nk_from_ck(c, f.q, f.n, k)) << f.spec << " k=" << k;
            EXPECT_EQ(brute, support::nk_lemma(c_oracle, f.q, f.n, k)) << f.spec << " k=" << k;
            EXPECT_EQ(brute, round_count(nk_from_spectrum(spectrum, f.q, f.n, k))) << f.spec << " k=" << k;
            if (k >= 3) {
                EXPECT_EQ(brute, support::geodesic_cycles_by_vertices(g, k)) << f.spec << " k=" << k;
            }
        }
        EXPECT_EQ(op[0], 0) << f.spec;
        EXPECT_EQ(op[1], 0) << f.spec;
    }
}

TEST(Geodesic, MultigraphShortCycles) {
    // Triangle with every edge doubled: 4-regular, q = 3.
    const std::vector<EdgePair> e = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}};
    const auto g = build_graph(3, e);
    const auto c = closed_walk_counts(g, 6);
    const auto op = geodesic_cycles_operator(g, 6);
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(BigInt(geodesic_cycles_bruteforce(g, k)), op[k - 1]) << k;
        EXPECT_EQ(nk_from_ck(c, 3, 3, k), op[k - 1]) << k;
    }
    // A 2-cycle goes out on one parallel edge and back on the other: 3 pairs, 2 orders each, 2 starts.
    EXPECT_EQ(op[1], 12);

    // 4-cycle with a loop at every vertex.
    const std::vector<EdgePair> loops = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}, {1, 1}, {2, 2}, {3, 3}};
    const auto h = build_graph(4, loops);
    const auto ch = closed_walk_counts(h, 6);
    const auto oh = geodesic_cycles_operator(h, 6);
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(BigInt(geodesic_cycles_bruteforce(h, k)), oh[k - 1]) << k;
        EXPECT_EQ(nk_from_ck(ch, 3, 4, k), oh[k - 1]) << k;
    }
    // each loop traversed in either orientation
    EXPECT_EQ(oh[0], 8);
}

TEST(Geodesic, BruteForceRefusesExpensiveRequests) {
    EXPECT_THROW(geodesic_cycles_bruteforce(generate_from_spec("prism:24"), 40), CostCapExceeded);
}

TEST(NkFromCk, WorkedExamples) {
    const auto k4 = counts("complete:4", 3);
    EXPECT_EQ(nk_from_ck(k4, 2, 4, 3), 24);
    const auto c4 = counts("cycle:4", 2);
    EXPECT_EQ(nk_from_ck(c4, 1, 4, 2), 0);
    EXPECT_EQ(nk_from_ck(counts("petersen", 1), 2, 10, 1), 0);
}

TEST(NkFromSpectrum, WorkedExamples) {
    EXPECT_NEAR(nk_from_spectrum(graph_spectrum(generate_from_spec("complete:4")), 2, 4, 3), 24.0, 1e-9);
    const auto petersen = graph_spectrum(generate_from_spec("petersen"));
    EXPECT_NEAR(nk_from_spectrum(petersen, 2, 10, 5), 120.0, 1e-9);
    EXPECT_NEAR(nk_from_spectrum(petersen, 2, 10, 2), 0.0, 1e-9);
}

TEST(NkFromSpectrum, RoundingGuard) {
    EXPECT_EQ(round_count(23.9999999999), 24);
    EXPECT_EQ(round_count(-1e-12), 0);
    EXPECT_THROW(round_count(23.6), RoundingResidualTooLarge);
}

TEST(ClosedWalkSum, MatchesScaledChebyshevSum) {
    for (const auto& f : all_fixtures()) {
        const auto g = support::load(f);
        const auto c = closed_walk_counts(g, 20);
        const auto s = graph_spectrum(g).values;
        for (int k = 1; k <= 20; ++k) {
            double lhs = 0.0;
            for (int i = 0; i <= k / 2; ++i) {
                lhs += std::pow(-static_cast<double>(f.q), i) *
                       (support::pascal_binomial(k - i, i) + support::pascal_binomial(k - i - 1, i - 1)).convert_to<double>() *
                       c[k - 2 * i].convert_to<double>();
            }
            lhs /= std::pow(f.q, k / 2.0);
            double rhs = 0.0;
            for (double lambda : s) {
                rhs += chebyshev_T(k, lambda / std::sqrt(static_cast<double>(f.q)));
            }
            EXPECT_LE(std::abs(lhs - rhs), 1e-6 * std::max(1.0, std::abs(rhs))) << f.spec << " k=" << k;
            EXPECT_EQ(closed_walk_binomial_sum(c, f.q, k), nk_from_ck(c, f.q, f.n, k) - (k % 2 == 0 ? f.n * (f.q - 1) : 0));
        }
    }
}

TEST(Census, HorizonAndAccessors) {
    const auto census = cycle_census(generate_from_spec("cycle:5"), 9);
    EXPECT_EQ(census.horizon, 9);
    EXPECT_EQ(census.closed_walks.size(), 10u);
    EXPECT_EQ(census.geodesic.size(), 9u);
    for (int k = 1; k <= 9; ++k) {
        EXPECT_EQ(census.N(k), k == 5 ? 10 : 0) << k;
    }
    EXPECT_EQ(census.C(0), 5);
}

TEST(Census, LargeValuesStayExact) {
    const auto census = cycle_census(generate_from_spec("complete:4"), 120);
    EXPECT_EQ(census.C(120), ipow(3, 120) + 3);
    EXPECT_EQ(census.N(120), nk_from_ck(census.closed_walks, 2, 4, 120));
}
