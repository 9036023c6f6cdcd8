#include "ihara/census.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ihara/chebyshev.hpp"
#include "ihara/error.hpp"

namespace ihara {
namespace {

// Sparse 0/1-with-multiplicity rows: (column, weight) pairs.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, long long>>>;

SparseRows sparse_adjacency(const Multigraph& g) {
    const auto a = adjacency_matrix(g);
    SparseRows rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != 0) {
                rows[i].emplace_back(j, a(i, j));
            }
        }
    }
    return rows;
}

SparseRows sparse_rows(const Matrix<int>& b) {
    SparseRows rows(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (b(i, j) != 0) {
                rows[i].emplace_back(j, b(i, j));
            }
        }
    }
    return rows;
}

// trace(M^k) for k = 0..K, iterating P <- P * M with exact integers.
std::vector<BigInt> trace_powers(const SparseRows& m, int K) {
    const std::size_t n = m.size();
    Matrix<BigInt> power = Matrix<BigInt>::identity(n);
    std::vector<BigInt> traces;
    traces.reserve(static_cast<std::size_t>(K) + 1);
    traces.emplace_back(static_cast<long long>(n));
    Matrix<BigInt> next(n, n);
    for (int k = 1; k <= K; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next(i, j) = 0;
            }
            for (std::size_t l = 0; l < n; ++l) {
                const BigInt& pil = power(i, l);
                if (pil.is_zero()) {
                    continue;
                }
                for (const auto& [j, w] : m[l]) {
                    next(i, j) += pil * w;
                }
            }
        }
        std::swap(power, next);
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += power(i, i);
        }
        traces.push_back(std::move(trace));
    }
    return traces;
}

std::uint64_t count_closings(const Multigraph& g, int first, int last, int remaining) {
    const auto& e_last = g.oriented_edge(last);
    if (remaining == 0) {
        const auto& e_first = g.oriented_edge(first);
        return e_last.terminus == e_first.origin && e_first.id != e_last.inverse_id ? 1 : 0;
    }
    std::uint64_t total = 0;
    for (int next : g.outgoing(e_last.terminus)) {
        if (next != e_last.inverse_id) {
            total += count_closings(g, first, next, remaining - 1);
        }
    }
    return total;
}

} // namespace

std::vector<BigInt> closed_walk_counts(const Multigraph& g, int K) {
    if (K < 1) {
        throw DomainError("closed_walk_counts needs K >= 1");
    }
    return trace_powers(sparse_adjacency(g), K);
}

Matrix<int> non_backtracking_operator(const Multigraph& g) {
    const std::size_t m = g.oriented_edges().size();
    Matrix<int> b(m, m, 0);
    for (const auto& e : g.oriented_edges()) {
        for (int f : g.outgoing(e.terminus)) {
            if (f != e.inverse_id) {
                b(e.id, f) = 1;
            }
        }
    }
    return b;
}

std::uint64_t geodesic_cycles_bruteforce(const Multigraph& g, int k) {
    if (k < 1) {
        throw DomainError("geodesic_cycles_bruteforce needs k >= 1");
    }
    int max_valency = 0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        max_valency = std::max(max_valency, g.valency(x));
    }
    const double branching = std::max(1, max_valency - 1);
    const double cost = static_cast<double>(g.oriented_edges().size()) * std::pow(branching, k - 1);
    if (cost > static_cast<double>(kBruteForceCap)) {
        throw CostCapExceeded("brute-force enumeration of length-" + std::to_string(k) + " cycles needs ~" +
                              std::to_string(static_cast<long long>(cost)) +
                              " steps; use the non-backtracking operator route instead");
    }
    std::uint64_t total = 0;
    for (const auto& e : g.oriented_edges()) {
        total += count_closings(g, e.id, e.id, k - 1);
    }
    return total;
}

std::vector<BigInt> geodesic_cycles_operator(const Multigraph& g, int K) {
    if (K < 1) {
        throw DomainError("geodesic_cycles_operator needs K >= 1");
    }
    auto traces = trace_powers(sparse_rows(non_backtracking_operator(g)), K);
    traces.erase(traces.begin());
    return traces;
}

BigInt closed_walk_binomial_sum(std::span<const BigInt> c, int q, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= c.size()) {
        throw DomainError("closed-walk sequence does not reach k = " + std::to_string(k));
    }
    BigInt sum = 0;
    BigInt minus_q_power = 1;
    for (int i = 0; 2 * i <= k; ++i) {
        sum += minus_q_power * chebyshev_coefficient(k, i) * c[k - 2 * i];
        minus_q_power *= -q;
    }
    return sum;
}

BigInt nk_from_ck(std::span<const BigInt> c, int q, int n, int k) {
    BigInt nk = closed_walk_binomial_sum(c, q, k);
    if (k % 2 == 0) {
        nk += BigInt(n) * (q - 1);
    }
    return nk;
}

double nk_from_spectrum(const Spectrum& s, int q, int n, int k) {
    const double root_q = std::sqrt(static_cast<double>(q));
    double sum = 0.0;
    for (double lambda : s.values) {
        sum += chebyshev_T(k, lambda / root_q);
    }
    double nk = std::pow(root_q, k) * sum;
    if (k % 2 == 0) {
        nk += static_cast<double>(n) * (q - 1);
    }
    return nk;
}

BigInt round_count(double value) {
    const double nearest = std::round(value);
    if (std::abs(value - nearest) > 1e-6 * std::max(1.0, std::abs(value))) {
        throw RoundingResidualTooLarge("value " + std::to_string(value) + " is not within rounding tolerance of an integer");
    }
    return BigInt(nearest);
}

CycleCensus cycle_census(const Multigraph& g, int K) {
    return {closed_walk_counts(g, K), geodesic_cycles_operator(g, K), K};
}

} // namespace ihara
