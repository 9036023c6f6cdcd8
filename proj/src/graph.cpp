#include "ihara/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ihara/error.hpp"

namespace ihara {

Multigraph::Multigraph(int n, std::vector<EdgePair> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 3) {
        throw InputError("graph must have at least 3 vertices, got " + std::to_string(n_));
    }
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                             "} has an endpoint outside [0, " + std::to_string(n_) + ")");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges_.begin(), edges_.end());

    oriented_.reserve(2 * edges_.size());
    std::vector<std::size_t> out_count(n_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        const int forward = static_cast<int>(2 * i);
        oriented_.push_back({forward, u, v, forward + 1});
        oriented_.push_back({forward + 1, v, u, forward});
        ++out_count[u];
        ++out_count[v];
    }

    out_offsets_.assign(n_ + 1, 0);
    for (int x = 0; x < n_; ++x) {
        out_offsets_[x + 1] = out_offsets_[x] + out_count[x];
    }
    out_ids_.resize(oriented_.size());
    std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
    for (const auto& e : oriented_) {
        out_ids_[cursor[e.origin]++] = e.id;
    }
}

std::span<const int> Multigraph::outgoing(Vertex x) const {
    return std::span<const int>(out_ids_).subspan(out_offsets_[x], out_offsets_[x + 1] - out_offsets_[x]);
}

std::size_t Multigraph::loop_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const EdgePair& e) { return e.first == e.second; }));
}

Multigraph build_graph(int n, std::span<const EdgePair> edges) {
    return Multigraph(n, std::vector<EdgePair>(edges.begin(), edges.end()));
}

bool is_connected(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (int id : g.outgoing(x)) {
            const Vertex y = g.oriented_edge(id).terminus;
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

std::optional<Bipartition> two_coloring(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (Vertex start = 0; start < n; ++start) {
        if (color[start] != -1) {
            continue;
        }
        color[start] = 0;
        std::queue<Vertex> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            const Vertex x = frontier.front();
            frontier.pop();
            for (int id : g.outgoing(x)) {
                const Vertex y = g.oriented_edge(id).terminus;
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    frontier.push(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex x = 0; x < n; ++x) {
        (color[x] == color[0] ? parts.left : parts.right).push_back(x);
    }
    return parts;
}

GraphProfile profile(const Multigraph& g) {
    const int valency = g.valency(0);
    for (Vertex x = 1; x < g.vertex_count(); ++x) {
        if (g.valency(x) != valency) {
            throw NotRegular("graph is not regular: vertex 0 has valency " + std::to_string(valency) +
                             " but vertex " + std::to_string(x) + " has valency " +
                             std::to_string(g.valency(x)));
        }
    }
    if (!is_connected(g)) {
        throw NotConnected("graph is not connected");
    }

    GraphProfile p;
    p.q = valency - 1;
    p.connected = true;
    p.bipartition = two_coloring(g);
    p.bipartite = p.bipartition.has_value();
    return p;
}

GraphParameters parameters(const Multigraph& g, const GraphProfile& p) {
    return {g.vertex_count(), p.q, p.bipartite};
}

Matrix<long long> adjacency_matrix(const Multigraph& g) {
    Matrix<long long> a(g.vertex_count(), g.vertex_count(), 0);
    for (const auto& e : g.oriented_edges()) {
        a(e.origin, e.terminus) += 1;
    }
    return a;
}

} // namespace ihara
