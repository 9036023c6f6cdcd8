#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ihara/bigint.hpp"
#include "ihara/graph.hpp"
#include "ihara/hk.hpp"
#include "ihara/spectral.hpp"

namespace ihara {

enum class VerdictRoute { spectral_definition, hk_criterion };

std::string_view to_string(VerdictRoute route);

struct RamanujanVerdict {
    bool is_ramanujan = false;
    // Known on the spectral route only.
    std::optional<double> max_nontrivial_abs;
    double threshold = 0.0;  // 2 q^{1/2}
    VerdictRoute route = VerdictRoute::spectral_definition;
    // Refutation witnesses: an eigenvalue on the spectral route, an index k
    // with h_k < 0 on the hk route.
    std::optional<double> witness_eigenvalue;
    std::optional<int> witness_k;
    // The hk route only scans h_1..h_K; a pass means "consistent up to K".
    std::optional<int> horizon;
};

inline constexpr double kSpectralTolerance = 1e-9;
inline constexpr double kSignTolerance = 1e-8;

// max |lambda| over Spec* against 2 q^{1/2}, with slack tol * q^{1/2}.
RamanujanVerdict ramanujan_spectral(const NontrivialSpectrum& ns, double tol = kSpectralTolerance);

// Refutes at the first k with h_k < -tol * max(1, max_{j<=k} |h_j|); a single
// negative coefficient rules the graph out. Throws DomainError for K < 10.
RamanujanVerdict ramanujan_hk(const HkSequence& seq, double tol = kSignTolerance);

// 1 + (4|S| - 3)^{1/k}: if the mean of T_k over S is at most 2 for even k,
// every |s| in S is at most this.
double multiset_bound(std::span<const double> s, int k);

// Bound on every nontrivial |lambda| once h_k >= 0 for even k:
// (1 + (4n-7)^{1/k}) q^{1/2} nonbipartite, (1 + (2n-7)^{1/k}) q^{1/2} bipartite.
// Throws DomainError for odd k, k < 2, or radicand < 1.
double even_k_bound(int k, int n, int q, bool bipartite);

enum class HasseWeilBranch { nonbipartite, bipartite };

struct HasseWeilRecord {
    int k;
    BigInt lhs;  // |N_k - main term|, exact
    double rhs;  // 2(n-1) q^{k/2} or 2(n-2) q^{k/2}
    bool satisfied;
};

struct HasseWeilReport {
    HasseWeilBranch branch = HasseWeilBranch::nonbipartite;
    std::vector<HasseWeilRecord> records;  // bipartite: even k only

    bool all_satisfied() const;
    std::optional<int> first_violation() const;
};

// Hasse-Weil type inequalities for k = 1..K, with a 1e-9 relative slack on rhs.
HasseWeilReport hasse_weil_check(std::span<const BigInt> nk, const GraphParameters& graph, int K);

// h_k <= 4(n-1) (nonbipartite) or 4(n-2) (bipartite) for every k, with a
// 1e-9 relative slack.
bool hk_upper_check(const HkSequence& seq);

struct EigenvalueEstimate {
    double estimate = 0.0;  // approximates q^{-1/2} max |lambda| over Spec*
    int k_used = 0;         // the larger even index of the ratio pair
    bool converged = false;
    double mu = 0.0;        // root > 1 of mu + 1/mu = estimate
    double implied_max_eigenvalue = 0.0;  // q^{1/2} * estimate
};

// r + 1/r with r = sqrt(h_{2k+2} / h_{2k}) at the deepest pair of negative
// even-index coefficients. Converged when the previous pair's estimate agrees
// to 1e-4. Throws NotApplicable when no even-index coefficient is negative and
// SignMismatch when the tail pair is not uniformly negative.
EigenvalueEstimate estimate_max_eigenvalue(const HkSequence& seq, double tol = kSignTolerance);

} // namespace ihara
