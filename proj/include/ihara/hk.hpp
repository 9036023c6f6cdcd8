#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ihara/bigint.hpp"
#include "ihara/graph.hpp"
#include "ihara/polynomial.hpp"

namespace ihara {

// Which closed form produced a sequence.
enum class HkRoute { spectral, from_nk, from_ck, series };

std::string_view to_string(HkRoute route);

// h_1..h_K, the Maclaurin coefficients of d/du ln Xi(q^{-1/2} u).
struct HkSequence {
    std::vector<double> values;  // h_k at index k-1
    HkRoute route = HkRoute::spectral;
    GraphParameters graph;

    int horizon() const { return static_cast<int>(values.size()); }
    double h(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

// h_k = 2|S| - sum_{s in S} T_k(s) with S = q^{-1/2} Spec*(X).
HkSequence hk_spectral(std::span<const double> scaled, const GraphParameters& graph, int K);

// From the geodesic-cycle counts N_1..N_K.
HkSequence hk_from_nk(std::span<const BigInt> nk, const GraphParameters& graph, int K);

// From the closed-walk counts C_0..C_K.
HkSequence hk_from_ck(std::span<const BigInt> c, const GraphParameters& graph, int K);

// From the rational function Xi by power-series log-differentiation.
HkSequence hk_series(const RationalFunction& xi, const GraphParameters& graph, int K);

struct SignVerdict {
    int k;
    double value;
    bool nonnegative;
};

// h_k counts as nonnegative iff h_k >= -tol * max(1, max_j |h_j|).
std::vector<SignVerdict> hk_nonneg(const HkSequence& seq, double tol);

// max over k of |a_k - b_k| / max(1, |a_k|, |b_k|).
double max_relative_difference(const HkSequence& a, const HkSequence& b);

// max over k of |a_k - b_k| / max(1, max_{j<=k} |a_j|, max_{j<=k} |b_j|).
// Floating routes lose absolute accuracy in proportion to the sequence scale
// (odd bipartite h_k is a sum of large terms cancelling to 2(n-2)), so this
// is the comparison used for whole-horizon consistency.
double max_scaled_difference(const HkSequence& a, const HkSequence& b);

} // namespace ihara
