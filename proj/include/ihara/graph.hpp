#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ihara/matrix.hpp"

namespace ihara {

using Vertex = int;
using EdgePair = std::pair<Vertex, Vertex>;

// One of the two orientations of an undirected edge. Edge i of the sorted
// edge list owns oriented edges 2i (low -> high endpoint) and 2i+1 (reverse).
// A loop gets two distinct ids that are each other's inverse.
struct OrientedEdge {
    int id;
    Vertex origin;
    Vertex terminus;
    int inverse_id;
};

// Finite undirected multigraph with loops. Immutable after construction.
class Multigraph {
public:
    // Throws InputError when n < 3 or an endpoint is out of range.
    Multigraph(int n, std::vector<EdgePair> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted list of {u, v} with u <= v; duplicates encode multiplicity.
    std::span<const EdgePair> edges() const { return edges_; }
    std::span<const OrientedEdge> oriented_edges() const { return oriented_; }
    const OrientedEdge& oriented_edge(int id) const { return oriented_[id]; }

    // Ids of oriented edges whose origin is x.
    std::span<const int> outgoing(Vertex x) const;

    // Number of oriented edges leaving x; a loop counts twice.
    int valency(Vertex x) const { return static_cast<int>(outgoing(x).size()); }
    std::size_t loop_count() const;

    bool operator==(const Multigraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_;
    std::vector<EdgePair> edges_;
    std::vector<OrientedEdge> oriented_;
    std::vector<std::size_t> out_offsets_;
    std::vector<int> out_ids_;
};

Multigraph build_graph(int n, std::span<const EdgePair> edges);

struct Bipartition {
    std::vector<Vertex> left;   // contains vertex 0
    std::vector<Vertex> right;
};

struct GraphProfile {
    int q = 0;  // the graph is (q+1)-regular
    bool bipartite = false;
    bool connected = false;
    std::optional<Bipartition> bipartition;
};

// The parameters every closed-form formula needs.
struct GraphParameters {
    int n = 0;
    int q = 0;
    bool bipartite = false;
};

bool is_connected(const Multigraph& g);

// Two-coloring by breadth-first search. A loop is an odd closed walk, so any
// loop makes the graph nonbipartite.
std::optional<Bipartition> two_coloring(const Multigraph& g);

// Validates the standing assumptions. Throws NotRegular or NotConnected.
GraphProfile profile(const Multigraph& g);

GraphParameters parameters(const Multigraph& g, const GraphProfile& p);

// Entry (x, y) counts oriented edges x -> y, so a loop adds 2 on the diagonal.
Matrix<long long> adjacency_matrix(const Multigraph& g);

} // namespace ihara
