#include "ihara/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ihara/error.hpp"

namespace ihara {
Multigraph read_edge_list(std::istream& in) {
    std::vector<EdgePair> edges;
    int declared_n = -1;
    int max_index = -1;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string first;
        fields >> first;
        if (first == "n") {
            if (declared_n != -1 || !edges.empty()) {
                throw ParseError(line_no, "header 'n <count>' must appear once, before any edge");
            }
            if (!(fields >> declared_n) || declared_n < 0) {
                throw ParseError(line_no, "expected 'n <count>' with a nonnegative count");
            }
        } else {
            long long u = 0;
            long long v = 0;
            fields = std::istringstream(line);
            if (!(fields >> u >> v)) {
                throw ParseError(line_no, "expected two vertex indices, got '" + line + "'");
            }
            if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000) {
                throw ParseError(line_no, "vertex index out of range in '" + line + "'");
            }
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            max_index = std::max<int>(max_index, static_cast<int>(std::max(u, v)));
        }
        std::string extra;
        if (fields >> extra && extra[0] != '#') {
            throw ParseError(line_no, "unexpected trailing text '" + extra + "'");
        }
    }
    const int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (declared_n >= 0 && max_index >= declared_n) {
        throw InputError("edge endpoint " + std::to_string(max_index) + " exceeds declared n = " +
                         std::to_string(declared_n));
    }
    return Multigraph(n, std::move(edges));
}

Multigraph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open edge list '" + path.string() + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

} // namespace ihara
