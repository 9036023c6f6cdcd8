#include "ihara/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

#include "ihara/error.hpp"

namespace ihara {
namespace {

void expect_params(std::string_view name, std::span<const int> params, std::size_t count) {
    if (params.size() != count) {
        throw InputError("generator '" + std::string(name) + "' expects " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
    }
}

Multigraph complete(int n) {
    std::vector<EdgePair> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Multigraph(n, std::move(edges));
}

Multigraph cycle(int n) {
    std::vector<EdgePair> edges;
    for (int u = 0; u < n; ++u) {
        edges.emplace_back(u, (u + 1) % n);
    }
    return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite(int m) {
    std::vector<EdgePair> edges;
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            edges.emplace_back(u, m + v);
        }
    }
    return Multigraph(2 * m, std::move(edges));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- 5+i.
Multigraph petersen() {
    std::vector<EdgePair> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Multigraph(10, std::move(edges));
}

Multigraph hypercube(int d) {
    if (d < 2 || d > 20) {
        throw InputError("hypercube dimension must be in [2, 20], got " + std::to_string(d));
    }
    const int n = 1 << d;
    std::vector<EdgePair> edges;
    for (int u = 0; u < n; ++u) {
        for (int bit = 0; bit < d; ++bit) {
            const int v = u ^ (1 << bit);
            if (u < v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Multigraph(n, std::move(edges));
}

// Outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- n+i.
Multigraph prism(int n) {
    if (n < 3) {
        throw InputError("prism needs a cycle of length >= 3, got " + std::to_string(n));
    }
    std::vector<EdgePair> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Multigraph(2 * n, std::move(edges));
}

Multigraph circulant(int n, std::span<const int> connections) {
    if (connections.empty()) {
        throw InputError("circulant needs a nonempty connection set");
    }
    std::set<int> offsets;
    for (int s : connections) {
        if (n > 0 && (s % n == 0)) {
            throw InputError("circulant offset " + std::to_string(s) + " is a multiple of n");
        }
        const int r = ((s % n) + n) % n;
        offsets.insert(std::min(r, n - r));
    }
    std::vector<EdgePair> edges;
    for (int s : offsets) {
        for (int u = 0; u < n; ++u) {
            const int v = (u + s) % n;
            // Offset n/2 pairs each vertex with its antipode exactly once.
            if (2 * s == n && u > v) {
                continue;
            }
            edges.emplace_back(u, v);
        }
    }
    return Multigraph(n, std::move(edges));
}

int parse_int(std::string_view text, std::string_view spec) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InputError("bad integer '" + std::string(text) + "' in generator spec '" + std::string(spec) + "'");
    }
    return value;
}

std::string canonical_name(std::string_view name) {
    if (name == "kmm") {
        return "complete_bipartite";
    }
    return std::string(name);
}

const std::set<std::string, std::less<>>& known_names() {
    static const std::set<std::string, std::less<>> names = {
        "complete", "cycle", "complete_bipartite", "kmm", "petersen", "hypercube", "prism", "circulant"};
    return names;
}

} // namespace

Multigraph generate(std::string_view raw_name, std::span<const int> params) {
    const std::string name = canonical_name(raw_name);
    if (name == "complete") {
        expect_params(name, params, 1);
        return complete(params[0]);
    }
    if (name == "cycle") {
        expect_params(name, params, 1);
        return cycle(params[0]);
    }
    if (name == "complete_bipartite") {
        expect_params(name, params, 1);
        if (params[0] < 2) {
            throw InputError("complete_bipartite needs m >= 2");
        }
        return complete_bipartite(params[0]);
    }
    if (name == "petersen") {
        expect_params(name, params, 0);
        return petersen();
    }
    if (name == "hypercube") {
        expect_params(name, params, 1);
        return hypercube(params[0]);
    }
    if (name == "prism") {
        expect_params(name, params, 1);
        return prism(params[0]);
    }
    if (name == "circulant") {
        if (params.size() < 2) {
            throw InputError("circulant expects n followed by at least one offset");
        }
        if (params[0] < 3) {
            throw InputError("graph must have at least 3 vertices, got " + std::to_string(params[0]));
        }
        return circulant(params[0], params.subspan(1));
    }
    throw InputError("unknown generator '" + std::string(raw_name) + "'");
}

Multigraph generate_from_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        // Parameters are separated by ':' or ','; "circulant:12:1,3" -> {12, 1, 3}.
        while (!rest.empty()) {
            const auto sep = rest.find_first_of(":,");
            params.push_back(parse_int(rest.substr(0, sep), spec));
            if (sep == std::string_view::npos) {
                break;
            }
            rest = rest.substr(sep + 1);
            if (rest.empty()) {
                throw InputError("trailing separator in generator spec '" + std::string(spec) + "'");
            }
        }
    }
    return generate(name, params);
}

bool is_generator_spec(std::string_view spec) {
    return known_names().contains(spec.substr(0, spec.find(':')));
}

} // namespace ihara
