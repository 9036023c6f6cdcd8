#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ihara/graph.hpp"

namespace ihara {

// Named graph families used as fixtures:
//   complete(n), cycle(n), complete_bipartite(m) = K_{m,m}, petersen,
//   hypercube(d), prism(n) = C_n x K_2, circulant(n, s_1, s_2, ...).
// Throws InputError for unknown ids, bad parameter counts, or n < 3.
Multigraph generate(std::string_view name, std::span<const int> params);

// Generator DSL: "petersen", "complete:4", "cycle:7", "kmm:3",
// "hypercube:3", "prism:24", "circulant:12:1,3".
Multigraph generate_from_spec(std::string_view spec);

// True when the text before the first ':' names a known generator.
bool is_generator_spec(std::string_view spec);

} // namespace ihara
