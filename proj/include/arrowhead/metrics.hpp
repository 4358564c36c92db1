// metrics.hpp — exact distance oracles over implicit Cayley tori.
//
// Everything here is plain BFS on the 4^n vertex set; results are exact and
// deterministic. Distances are stored in flat uint32 arrays indexed by
// GraphSpec::index.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley.hpp"

namespace arrowhead {

/// Which way arcs are traversed. `reverse` walks arcs against their
/// direction, so dist[v] becomes the length of a shortest v -> origin path.
enum class ArcSense { forward, reverse };

/// Distances from one origin to every vertex.
struct DistanceField {
    GraphSpec spec;
    TorusVertex origin;
    ArcSense sense = ArcSense::forward;
    std::vector<std::uint32_t> dist;  // indexed by spec.index(v)

    std::uint32_t at(const TorusVertex& v) const { return dist[spec.index(v)]; }
};

/// Number of vertices at each distance from the origin; counts[p] covers
/// distance p and the vector length is eccentricity + 1.
struct DistanceHistogram {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (std::uint64_t c : counts) t += c;
        return t;
    }
};

inline DistanceField bfs_from(const GraphSpec& g, const TorusVertex& origin,
                              ArcSense sense = ArcSense::forward) {
    const std::uint64_t n_vertices = g.vertex_count();
    const int deg = g.degree();
    DistanceField field{g, origin, sense, {}};
    field.dist.assign(n_vertices, std::numeric_limits<std::uint32_t>::max());

    std::vector<std::uint64_t> queue;
    queue.reserve(n_vertices);
    field.dist[g.index(origin)] = 0;
    queue.push_back(g.index(origin));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const TorusVertex u = g.vertex_at(queue[head]);
        const std::uint32_t du = field.dist[queue[head]];
        for (int j = 0; j < deg; ++j) {
            const TorusVertex v =
                sense == ArcSense::forward ? g.step(u, j) : g.step_back(u, j);
            const std::uint64_t vi = g.index(v);
            if (field.dist[vi] == std::numeric_limits<std::uint32_t>::max()) {
                field.dist[vi] = du + 1;
                queue.push_back(vi);
            }
        }
    }
    // The family is strongly connected at every level, so the sweep is total.
    return field;
}

inline std::uint32_t eccentricity(const DistanceField& field) {
    return *std::max_element(field.dist.begin(), field.dist.end());
}

/// Exact diameter by BFS from the identity; Cayley graphs are
/// vertex-transitive, so one sweep suffices. `paranoid_samples` extra
/// origins (seeded) re-derive the eccentricity and must agree.
inline std::uint32_t diameter_oracle(const GraphSpec& g, int paranoid_samples = 0,
                                     std::uint64_t seed = 0) {
    const std::uint32_t ecc = eccentricity(bfs_from(g, {0, 0}));
    if (paranoid_samples > 0) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < paranoid_samples; ++i) {
            const TorusVertex origin = g.vertex_at(rng() % g.vertex_count());
            if (eccentricity(bfs_from(g, origin)) != ecc) {
                throw std::logic_error("vertex-transitivity violated at origin " +
                                       to_string(origin));
            }
        }
    }
    return ecc;
}

/// All vertices at maximum distance from the identity, sorted by index.
inline std::vector<TorusVertex> antipodals_oracle(const GraphSpec& g) {
    const DistanceField field = bfs_from(g, {0, 0});
    const std::uint32_t ecc = eccentricity(field);
    std::vector<TorusVertex> out;
    for (std::uint64_t i = 0; i < field.dist.size(); ++i) {
        if (field.dist[i] == ecc) out.push_back(g.vertex_at(i));
    }
    return out;
}

/// One shortest path from -> to as a vertex sequence (length = distance).
/// Deterministic: BFS the reverse graph from `to`, then walk forward always
/// taking the first generator in canonical order that decreases the
/// remaining distance.
inline std::vector<TorusVertex> shortest_path(const GraphSpec& g, const TorusVertex& from,
                                              const TorusVertex& to) {
    const DistanceField remaining = bfs_from(g, to, ArcSense::reverse);
    std::vector<TorusVertex> path{from};
    TorusVertex cur = from;
    while (cur != to) {
        const std::uint32_t left = remaining.at(cur);
        bool advanced = false;
        for (int j = 0; j < g.degree(); ++j) {
            const TorusVertex nxt = g.step(cur, j);
            if (remaining.at(nxt) + 1 == left) {
                cur = nxt;
                path.push_back(cur);
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("shortest_path: no descending arc");
    }
    return path;
}

inline DistanceHistogram distance_histogram(const DistanceField& field) {
    DistanceHistogram h;
    h.counts.assign(eccentricity(field) + 1, 0);
    for (std::uint32_t d : field.dist) ++h.counts[d];
    return h;
}

}  // namespace arrowhead
