#pragma once

#include <filesystem>
#include <iosfwd>

#include "ihara/graph.hpp"

namespace ihara {

// Edge-list text format:
//   # comment
//   n <count>        optional header; otherwise n = 1 + largest index
//   u v              one edge per line, 0-based; repeats add multiplicity,
//                    "u u" is a loop
// Throws ParseError naming the offending line.
Multigraph read_edge_list(std::istream& in);
Multigraph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Multigraph& g);

} // namespace ihara
