#pragma once

#include <string>
#include <vector>

#include "ihara/generators.hpp"
#include "ihara/graph.hpp"

namespace ihara::support {

struct Fixture {
    std::string spec;
    int n;
    int q;
    bool bipartite;
    bool ramanujan;
};

// Every graph the suites iterate over. prism:30 is only used where the horizon
// needs a second non-Ramanujan member.
inline const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> f = {
        {"complete:4", 4, 2, false, true},   {"cycle:5", 5, 1, false, true},  {"cycle:6", 6, 1, true, true},
        {"petersen", 10, 2, false, true},    {"kmm:3", 6, 2, true, true},     {"hypercube:3", 8, 2, true, true},
        {"prism:6", 12, 2, true, true},      {"prism:24", 48, 2, true, false}, {"prism:30", 60, 2, true, false},
    };
    return f;
}

// Fixtures that acceptance criterion lists name explicitly for route agreement.
inline std::vector<Fixture> route_fixtures() {
    std::vector<Fixture> out;
    for (const auto& f : all_fixtures()) {
        if (f.spec != "prism:30") {
            out.push_back(f);
        }
    }
    return out;
}

inline std::vector<Fixture> small_fixtures(int max_n) {
    std::vector<Fixture> out;
    for (const auto& f : all_fixtures()) {
        if (f.n <= max_n) {
            out.push_back(f);
        }
    }
    return out;
}

inline Multigraph load(const Fixture& f) { return generate_from_spec(f.spec); }

inline GraphParameters params(const Fixture& f) { return {f.n, f.q, f.bipartite}; }

} // namespace ihara::support
