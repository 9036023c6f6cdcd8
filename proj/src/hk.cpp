#include "ihara/hk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ihara/census.hpp"
#include "ihara/chebyshev.hpp"
#include "ihara/error.hpp"
#include "ihara/zeta.hpp"

namespace ihara {
namespace {

// h_k given M = N_k - [k even] n(q-1), which is also the closed-walk binomial
// sum. With Q = q^{k/2}:
//   nonbipartite:          2(n-1) + (q^k + 1 - M) / Q
//   bipartite, k even:     2(n-2) + (2q^k + 2 - M) / Q
//   bipartite, k odd:      2(n-2)
// The numerator is formed exactly so the cancellation against q^k is lossless.
double closed_form(const BigInt& m, const GraphParameters& g, int k) {
    if (g.bipartite && k % 2 == 1) {
        return 2.0 * (g.n - 2);
    }
    const BigInt qk = ipow(g.q, k);
    const BigInt numerator = g.bipartite ? BigInt(2 * qk + 2 - m) : BigInt(qk + 1 - m);
    const double base = g.bipartite ? 2.0 * (g.n - 2) : 2.0 * (g.n - 1);
    const BigInt half_power = ipow(g.q, k / 2);
    double correction = ratio_to_double(numerator, half_power);
    if (k % 2 == 1) {
        correction /= std::sqrt(static_cast<double>(g.q));
    }
    return base + correction;
}

void require_horizon(std::size_t available, std::size_t needed, const char* what) {
    if (available < needed) {
        throw DomainError(std::string(what) + " holds " + std::to_string(available) + " entries, need " +
                          std::to_string(needed));
    }
}

} // namespace

std::string_view to_string(HkRoute route) {
    switch (route) {
    case HkRoute::spectral:
        return "spectral";
    case HkRoute::from_nk:
        return "from_Nk";
    case HkRoute::from_ck:
        return "from_Ck";
    case HkRoute::series:
        return "series";
    }
    return "unknown";
}

HkSequence hk_spectral(std::span<const double> scaled, const GraphParameters& graph, int K) {
    HkSequence seq{std::vector<double>(static_cast<std::size_t>(std::max(K, 0)),
                                       2.0 * static_cast<double>(scaled.size())),
                   HkRoute::spectral, graph};
    for (double s : scaled) {
        const auto t = chebyshev_T_sequence(K, s);
        for (int k = 1; k <= K; ++k) {
            seq.values[k - 1] -= t[k];
        }
    }
    return seq;
}

HkSequence hk_from_nk(std::span<const BigInt> nk, const GraphParameters& graph, int K) {
    require_horizon(nk.size(), static_cast<std::size_t>(std::max(K, 0)), "N-sequence");
    HkSequence seq{{}, HkRoute::from_nk, graph};
    const BigInt trivial = BigInt(graph.n) * (graph.q - 1);
    for (int k = 1; k <= K; ++k) {
        const BigInt m = k % 2 == 0 ? nk[k - 1] - trivial : nk[k - 1];
        seq.values.push_back(closed_form(m, graph, k));
    }
    return seq;
}

HkSequence hk_from_ck(std::span<const BigInt> c, const GraphParameters& graph, int K) {
    require_horizon(c.size(), static_cast<std::size_t>(std::max(K, 0)) + 1, "C-sequence");
    HkSequence seq{{}, HkRoute::from_ck, graph};
    for (int k = 1; k <= K; ++k) {
        seq.values.push_back(closed_form(closed_walk_binomial_sum(c, graph.q, k), graph, k));
    }
    return seq;
}

HkSequence hk_series(const RationalFunction& xi, const GraphParameters& graph, int K) {
    return {log_series(xi, graph.q, K), HkRoute::series, graph};
}

std::vector<SignVerdict> hk_nonneg(const HkSequence& seq, double tol) {
    double largest = 1.0;
    for (double v : seq.values) {
        largest = std::max(largest, std::abs(v));
    }
    std::vector<SignVerdict> out;
    out.reserve(seq.values.size());
    for (int k = 1; k <= seq.horizon(); ++k) {
        const double v = seq.h(k);
        out.push_back({k, v, v >= -tol * largest});
    }
    return out;
}

double max_relative_difference(const HkSequence& a, const HkSequence& b) {
    const int K = std::min(a.horizon(), b.horizon());
    double worst = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double x = a.h(k);
        const double y = b.h(k);
        worst = std::max(worst, std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}));
    }
    return worst;
}

double max_scaled_difference(const HkSequence& a, const HkSequence& b) {
    const int K = std::min(a.horizon(), b.horizon());
    double worst = 0.0;
    double scale = 1.0;
    for (int k = 1; k <= K; ++k) {
        const double x = a.h(k);
        const double y = b.h(k);
        scale = std::max({scale, std::abs(x), std::abs(y)});
        worst = std::max(worst, std::abs(x - y) / scale);
    }
    return worst;
}

} // namespace ihara
