// export.hpp — deterministic text serializations of family graphs.
//
// All writers emit byte-identical output for identical inputs: edges are
// materialized as coordinate tuples, sorted numerically, then rendered.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley.hpp"

namespace arrowhead {

enum class ExportFormat { edge_list, dot, adjacency_csv, json_stats };

inline ExportFormat export_format_from_string(const std::string& s) {
    if (s == "edge_list") return ExportFormat::edge_list;
    if (s == "dot") return ExportFormat::dot;
    if (s == "adjacency_csv") return ExportFormat::adjacency_csv;
    if (s == "json_stats") return ExportFormat::json_stats;
    throw std::invalid_argument("unknown export format: " + s);
}

/// Parses "x,y" into canonical residues at the given level; rejects
/// malformed text and out-of-range coordinates.
inline TorusVertex parse_vertex(const std::string& text, const Level& level) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= text.size()) {
        throw std::invalid_argument("vertex must be 'x,y', got '" + text + "'");
    }
    const auto parse_coord = [&](const std::string& part) -> std::uint32_t {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate '" + part + "'");
        }
        if (used != part.size()) throw std::invalid_argument("bad coordinate '" + part + "'");
        if (value >= level.side()) {
            throw std::invalid_argument("coordinate " + part + " out of range at level " +
                                        std::to_string(level.n()));
        }
        return static_cast<std::uint32_t>(value);
    };
    return {parse_coord(text.substr(0, comma)), parse_coord(text.substr(comma + 1))};
}

namespace detail {

struct EdgeTuple {
    std::uint32_t x1, y1, x2, y2;
    friend auto operator<=>(const EdgeTuple&, const EdgeTuple&) = default;
};

/// Streams the edge multiset in sorted (x1, y1, x2, y2) order without
/// materializing it: vertices are visited in index order (the primary key),
/// and each vertex's block of at most six tuples is sorted locally.
/// Directed graphs yield one tuple per arc (3N). Undirected graphs yield one
/// tuple per edge with the smaller-index endpoint first (3N for n >= 1); at
/// n = 0 every generator slot is a loop and is emitted as its own tuple (6),
/// preserving multiplicity.
template <typename Fn>
inline void for_each_edge_sorted(const GraphSpec& g, Fn&& fn) {
    std::array<EdgeTuple, 6> block;
    const std::uint64_t n_vertices = g.vertex_count();
    for (std::uint64_t i = 0; i < n_vertices; ++i) {
        const TorusVertex u = g.vertex_at(i);
        int count = 0;
        for (int j = 0; j < g.degree(); ++j) {
            const TorusVertex v = g.step(u, j);
            if (!g.directed() && g.index(v) < i) continue;  // other endpoint emits it
            block[count++] = {u.x, u.y, v.x, v.y};
        }
        std::sort(block.begin(), block.begin() + count);
        for (int j = 0; j < count; ++j) fn(block[j]);
    }
}

}  // namespace detail

/// One line per edge/arc, "x1,y1 -- x2,y2" (undirected) or "x1,y1 -> x2,y2"
/// (directed), sorted by (x1, y1, x2, y2); parallel edges repeat their line.
inline std::vector<std::string> edge_list_lines(const GraphSpec& g) {
    const char* sep = g.directed() ? " -> " : " -- ";
    std::vector<std::string> lines;
    detail::for_each_edge_sorted(g, [&](const detail::EdgeTuple& e) {
        lines.push_back(std::to_string(e.x1) + "," + std::to_string(e.y1) + sep +
                        std::to_string(e.x2) + "," + std::to_string(e.y2));
    });
    return lines;
}

inline void write_edge_list(const GraphSpec& g, std::ostream& out) {
    const char* sep = g.directed() ? " -> " : " -- ";
    detail::for_each_edge_sorted(g, [&](const detail::EdgeTuple& e) {
        out << e.x1 << ',' << e.y1 << sep << e.x2 << ',' << e.y2 << '\n';
    });
}

/// Graphviz rendering with node ids v_x_y; same edge order as edge_list.
inline void write_dot(const GraphSpec& g, std::ostream& out) {
    const bool directed = g.directed();
    out << (directed ? "digraph " : "graph ") << to_string(g.variant()) << '_'
        << g.level().n() << " {\n";
    const std::uint64_t n_vertices = g.vertex_count();
    for (std::uint64_t i = 0; i < n_vertices; ++i) {
        const TorusVertex v = g.vertex_at(i);
        out << "  v_" << v.x << '_' << v.y << ";\n";
    }
    const char* sep = directed ? " -> " : " -- ";
    detail::for_each_edge_sorted(g, [&](const detail::EdgeTuple& e) {
        out << "  v_" << e.x1 << '_' << e.y1 << sep << "v_" << e.x2 << '_' << e.y2 << ";\n";
    });
    out << "}\n";
}

/// Dense multiplicity matrix in vertex-index order; entry (i, j) counts
/// generator slots mapping vertex i to vertex j. Only sensible for small
/// levels, so levels above 5 are rejected.
inline void write_adjacency_csv(const GraphSpec& g, std::ostream& out) {
    if (g.level().n() > 5) {
        throw std::invalid_argument("adjacency_csv limited to levels <= 5");
    }
    const std::uint64_t n_vertices = g.vertex_count();
    std::vector<std::uint32_t> row(n_vertices);
    for (std::uint64_t i = 0; i < n_vertices; ++i) {
        std::fill(row.begin(), row.end(), 0);
        const TorusVertex u = g.vertex_at(i);
        for (int j = 0; j < g.degree(); ++j) ++row[g.index(g.step(u, j))];
        for (std::uint64_t jcol = 0; jcol < n_vertices; ++jcol) {
            if (jcol) out << ',';
            out << row[jcol];
        }
        out << '\n';
    }
}

}  // namespace arrowhead
