#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ihara/bigint.hpp"
#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"
#include "ihara/spectral.hpp"

namespace ihara {

// Exact closed-walk and geodesic-cycle counts up to a horizon K.
struct CycleCensus {
    std::vector<BigInt> closed_walks;  // C_0 .. C_K, C_0 = n
    std::vector<BigInt> geodesic;      // N_1 .. N_K stored at index k-1
    int horizon = 0;

    const BigInt& C(int k) const { return closed_walks.at(k); }
    const BigInt& N(int k) const { return geodesic.at(k - 1); }
};

// Enumeration budget for the definitional oracle.
inline constexpr std::uint64_t kBruteForceCap = 100'000'000;

// C_0..C_K with C_k = trace(A^k), exact.
std::vector<BigInt> closed_walk_counts(const Multigraph& g, int K);

// 0/1 matrix over oriented edges: (e, f) = 1 iff terminus(e) = origin(f) and
// f is not the inverse of e.
Matrix<int> non_backtracking_operator(const Multigraph& g);

// Counts oriented-edge sequences (e_1..e_k) that close up and contain no
// backtracking step anywhere, the wrap-around pair (e_k, e_1) included.
// Throws CostCapExceeded when (2m) q^{k-1} exceeds kBruteForceCap.
std::uint64_t geodesic_cycles_bruteforce(const Multigraph& g, int k);

// N_1..N_K as trace(B^k) for the non-backtracking operator B.
std::vector<BigInt> geodesic_cycles_operator(const Multigraph& g, int K);

// sum_{i=0}^{floor(k/2)} (-q)^i (C(k-i,i) + C(k-i-1,i-1)) C_{k-2i}.
BigInt closed_walk_binomial_sum(std::span<const BigInt> c, int q, int k);

// N_k from C_0..C_k: the binomial sum, plus n(q-1) when k is even.
BigInt nk_from_ck(std::span<const BigInt> c, int q, int n, int k);

// N_k = q^{k/2} sum_{s in q^{-1/2} Spec(X)} T_k(s), plus n(q-1) for even k.
// `s` is the full spectrum, trivial eigenvalues included.
double nk_from_spectrum(const Spectrum& s, int q, int n, int k);

// Nearest integer to a floating N_k; throws RoundingResidualTooLarge when the
// residual exceeds 1e-6 * max(1, |value|).
BigInt round_count(double value);

// Closed walks by matrix powers and geodesic cycles by the operator route.
CycleCensus cycle_census(const Multigraph& g, int K);

} // namespace ihara
