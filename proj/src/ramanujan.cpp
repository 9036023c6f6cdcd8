#include "ihara/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ihara/error.hpp"

namespace ihara {

namespace {

// q^{k/2}, exact for even k.
double root_q_power(int q, int k) {
    const double whole = ipow(q, k / 2).convert_to<double>();
    return k % 2 == 0 ? whole : whole * std::sqrt(static_cast<double>(q));
}

} // namespace
namespace {

constexpr double kConvergenceGap = 1e-4;

double ratio_estimate(double earlier, double later) {
    const double r = std::sqrt(later / earlier);
    return r + 1.0 / r;
}

bool within_slack(const BigInt& lhs, double rhs) { return lhs.convert_to<double>() <= rhs * (1.0 + 1e-9); }

} // namespace

std::string_view to_string(VerdictRoute route) {
    return route == VerdictRoute::spectral_definition ? "spectral_definition" : "hk_criterion";
}

RamanujanVerdict ramanujan_spectral(const NontrivialSpectrum& ns, double tol) {
    const double root_q = std::sqrt(static_cast<double>(ns.q));
    RamanujanVerdict v;
    v.route = VerdictRoute::spectral_definition;
    v.threshold = 2.0 * root_q;
    double largest = 0.0;
    double witness = 0.0;
    for (double lambda : ns.values) {
        if (std::abs(lambda) > largest) {
            largest = std::abs(lambda);
            witness = lambda;
        }
    }
    v.max_nontrivial_abs = largest;
    v.is_ramanujan = largest <= v.threshold + tol * root_q;
    if (!v.is_ramanujan) {
        v.witness_eigenvalue = witness;
    }
    return v;
}

RamanujanVerdict ramanujan_hk(const HkSequence& seq, double tol) {
    if (seq.horizon() < 10) {
        throw DomainError("hk criterion needs a horizon of at least 10, got " + std::to_string(seq.horizon()));
    }
    RamanujanVerdict v;
    v.route = VerdictRoute::hk_criterion;
    v.threshold = 2.0 * std::sqrt(static_cast<double>(seq.graph.q));
    v.horizon = seq.horizon();
    v.is_ramanujan = true;
    double running = 1.0;
    for (int k = 1; k <= seq.horizon(); ++k) {
        const double h = seq.h(k);
        running = std::max(running, std::abs(h));
        if (h < -tol * running) {
            v.is_ramanujan = false;
            v.witness_k = k;
            break;
        }
    }
    return v;
}

double multiset_bound(std::span<const double> s, int k) {
    if (s.empty()) {
        throw DomainError("multiset_bound needs a nonempty multiset");
    }
    if (k < 2 || k % 2 != 0) {
        throw DomainError("multiset_bound needs an even k >= 2, got " + std::to_string(k));
    }
    return 1.0 + std::pow(4.0 * static_cast<double>(s.size()) - 3.0, 1.0 / k);
}

double even_k_bound(int k, int n, int q, bool bipartite) {
    if (k < 2 || k % 2 != 0) {
        throw DomainError("even_k_bound needs an even k >= 2, got " + std::to_string(k));
    }
    const int radicand = bipartite ? 2 * n - 7 : 4 * n - 7;
    if (radicand < 1) {
        throw DomainError("even_k_bound undefined for " + std::string(bipartite ? "bipartite" : "nonbipartite") +
                          " n = " + std::to_string(n));
    }
    return (1.0 + std::pow(static_cast<double>(radicand), 1.0 / k)) * std::sqrt(static_cast<double>(q));
}

bool HasseWeilReport::all_satisfied() const {
    return std::all_of(records.begin(), records.end(), [](const HasseWeilRecord& r) { return r.satisfied; });
}

std::optional<int> HasseWeilReport::first_violation() const {
    for (const auto& r : records) {
        if (!r.satisfied) {
            return r.k;
        }
    }
    return std::nullopt;
}

HasseWeilReport hasse_weil_check(std::span<const BigInt> nk, const GraphParameters& graph, int K) {
    if (nk.size() < static_cast<std::size_t>(std::max(K, 0))) {
        throw DomainError("N-sequence shorter than horizon " + std::to_string(K));
    }
    HasseWeilReport report;
    report.branch = graph.bipartite ? HasseWeilBranch::bipartite : HasseWeilBranch::nonbipartite;
    const BigInt trivial = BigInt(graph.n) * (graph.q - 1);
    for (int k = 1; k <= K; ++k) {
        const bool even = k % 2 == 0;
        if (graph.bipartite && !even) {
            continue;
        }
        const BigInt qk = ipow(graph.q, k);
        BigInt main_term;
        double width = 0.0;
        if (graph.bipartite) {
            main_term = trivial + 2 * qk + 2;
            width = 2.0 * (graph.n - 2);
        } else {
            main_term = (even ? trivial : BigInt(0)) + qk + 1;
            width = 2.0 * (graph.n - 1);
        }
        HasseWeilRecord record{k, boost::multiprecision::abs(nk[k - 1] - main_term), width * root_q_power(graph.q, k), false};
        record.satisfied = within_slack(record.lhs, record.rhs);
        report.records.push_back(std::move(record));
    }
    return report;
}

bool hk_upper_check(const HkSequence& seq) {
    const double bound = seq.graph.bipartite ? 4.0 * (seq.graph.n - 2) : 4.0 * (seq.graph.n - 1);
    return std::all_of(seq.values.begin(), seq.values.end(),
                       [bound](double h) { return h <= bound + 1e-9 * bound; });
}

EigenvalueEstimate estimate_max_eigenvalue(const HkSequence& seq, double tol) {
    const int last = seq.horizon() - seq.horizon() % 2;
    double running = 1.0;
    bool any_negative = false;
    for (int k = 1; k <= seq.horizon(); ++k) {
        running = std::max(running, std::abs(seq.h(k)));
        if (k % 2 == 0 && seq.h(k) < -tol * running) {
            any_negative = true;
        }
    }
    if (!any_negative) {
        throw NotApplicable("no negative even-index h_k up to k = " + std::to_string(seq.horizon()) +
                            "; the graph looks Ramanujan at this horizon");
    }
    if (last < 4 || seq.h(last) >= 0.0 || seq.h(last - 2) >= 0.0) {
        throw SignMismatch("h_" + std::to_string(last - 2) + " and h_" + std::to_string(last) +
                           " are not both negative; increase the horizon");
    }

    EigenvalueEstimate e;
    e.k_used = last;
    e.estimate = ratio_estimate(seq.h(last - 2), seq.h(last));
    if (last >= 6 && seq.h(last - 4) < 0.0) {
        const double previous = ratio_estimate(seq.h(last - 4), seq.h(last - 2));
        e.converged = std::abs(previous - e.estimate) < kConvergenceGap;
    }
    e.mu = (e.estimate + std::sqrt(std::max(0.0, e.estimate * e.estimate - 4.0))) / 2.0;
    e.implied_max_eigenvalue = std::sqrt(static_cast<double>(seq.graph.q)) * e.estimate;
    return e;
}

} // namespace ihara
