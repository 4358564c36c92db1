// cayley.hpp — arrowhead/diamond Cayley tori over Z_{2^n} x Z_{2^n}.
//
// Graphs are implicit: a GraphSpec carries the level and the ordered
// generating set, and neighbors are computed by modular offset addition.
// No adjacency storage; BFS and exporters index vertices by x*2^n + y.
#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrowhead {

// BFS-backed operations enumerate 4^n vertices; this ceiling guards memory.
// Overridable per call site and via the CLI (flag or environment).
inline constexpr int kDefaultMaxLevel = 12;

// Hard representation bound: vertex indices are x*2^n + y in 64 bits,
// coordinates in 32 bits.
inline constexpr int kMaxRepresentableLevel = 31;

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

enum class Variant { arrowhead, diamond };
enum class Directedness { directed, undirected };

inline const char* to_string(Variant v) {
    return v == Variant::arrowhead ? "arrowhead" : "diamond";
}

/// Graph level n: side length 2^n, order 4^n.
class Level {
public:
    explicit Level(int n) : n_(n) {
        if (n < 0 || n > kMaxRepresentableLevel) {
            throw std::invalid_argument("level must be in [0, " +
                                        std::to_string(kMaxRepresentableLevel) + "], got " +
                                        std::to_string(n));
        }
    }

    int n() const { return n_; }
    std::uint32_t side() const { return std::uint32_t{1} << n_; }
    std::uint32_t mask() const { return side() - 1; }
    std::uint64_t order() const { return std::uint64_t{1} << (2 * n_); }

private:
    int n_;
};

/// A point of Z_{2^n} x Z_{2^n}, kept in canonical residues [0, 2^n).
struct TorusVertex {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend bool operator==(const TorusVertex&, const TorusVertex&) = default;
    friend auto operator<=>(const TorusVertex&, const TorusVertex&) = default;
};

inline std::string to_string(const TorusVertex& v) {
    return std::to_string(v.x) + "," + std::to_string(v.y);
}

inline std::ostream& operator<<(std::ostream& out, const TorusVertex& v) {
    return out << "(" << v.x << "," << v.y << ")";
}

/// Coordinate offset of one generator, before reduction mod 2^n.
struct GenOffset {
    int dx = 0;
    int dy = 0;
};

/// Ordered generating multiset. Directed sets keep the three positive
/// generators; undirected sets append the inverses in the same order.
/// Duplicates arise naturally at n <= 1 after reduction and are preserved.
struct GeneratorSet {
    Variant variant;
    Directedness directedness;
    std::vector<GenOffset> offsets;

    static GeneratorSet make(Variant variant, Directedness directedness) {
        std::vector<GenOffset> positive;
        if (variant == Variant::arrowhead) {
            positive = {{-1, -1}, {1, 0}, {0, 1}};
        } else {
            positive = {{1, 1}, {1, 0}, {0, 1}};
        }
        GeneratorSet g{variant, directedness, positive};
        if (directedness == Directedness::undirected) {
            for (const GenOffset& s : positive) g.offsets.push_back({-s.dx, -s.dy});
        }
        return g;
    }
};

/// One Cayley graph of the family: level + generating set. Immutable.
class GraphSpec {
public:
    GraphSpec(Level level, Variant variant, Directedness directedness)
        : level_(level), gens_(GeneratorSet::make(variant, directedness)) {
        reduce_offsets();
    }

    const Level& level() const { return level_; }
    Variant variant() const { return gens_.variant; }
    Directedness directedness() const { return gens_.directedness; }
    bool directed() const { return gens_.directedness == Directedness::directed; }
    const GeneratorSet& generators() const { return gens_; }

    std::uint64_t vertex_count() const { return level_.order(); }
    int degree() const { return static_cast<int>(gens_.offsets.size()); }

    // Total neighbor slots: 3N arcs when directed, 6N edge endpoints otherwise.
    std::uint64_t arc_slots() const { return vertex_count() * static_cast<std::uint64_t>(degree()); }

    std::uint64_t index(const TorusVertex& v) const {
        return (static_cast<std::uint64_t>(v.x) << level_.n()) | v.y;
    }

    TorusVertex vertex_at(std::uint64_t idx) const {
        return {static_cast<std::uint32_t>(idx >> level_.n()),
                static_cast<std::uint32_t>(idx & level_.mask())};
    }

    /// v plus generator j, reduced mod 2^n.
    TorusVertex step(const TorusVertex& v, int j) const {
        const std::uint32_t m = level_.mask();
        return {(v.x + dx_[j]) & m, (v.y + dy_[j]) & m};
    }

    /// v minus generator j (arc traversal against its direction).
    TorusVertex step_back(const TorusVertex& v, int j) const {
        const std::uint32_t m = level_.mask();
        return {(v.x - dx_[j]) & m, (v.y - dy_[j]) & m};
    }

    /// All out-neighbors in generator order, duplicates and loops preserved.
    std::vector<TorusVertex> neighbors(const TorusVertex& v) const {
        std::vector<TorusVertex> out;
        out.reserve(dx_.size());
        for (int j = 0; j < degree(); ++j) out.push_back(step(v, j));
        return out;
    }

private:
    void reduce_offsets() {
        const std::uint32_t m = level_.mask();
        for (const GenOffset& s : gens_.offsets) {
            dx_.push_back(static_cast<std::uint32_t>(s.dx) & m);
            dy_.push_back(static_cast<std::uint32_t>(s.dy) & m);
        }
    }

    Level level_;
    GeneratorSet gens_;
    std::vector<std::uint32_t> dx_, dy_;  // offsets reduced mod 2^n
};

/// Builds the graph after checking the BFS resource ceiling.
inline GraphSpec make_graph(int n, Variant variant, Directedness directedness,
                            int max_level = kDefaultMaxLevel) {
    if (n > max_level) {
        throw ResourceLimitError("level " + std::to_string(n) + " exceeds ceiling " +
                                 std::to_string(max_level));
    }
    return GraphSpec(Level(n), variant, directedness);
}

/// Subgroup 2^k * G_{n-k}: every coordinate pair with both entries
/// multiples of 2^k. Sorted by vertex index. Cardinality 4^(n-k).
inline std::vector<TorusVertex> subgroup_vertices(int n, int k) {
    Level level(n);
    if (k < 0 || k > n) {
        throw std::invalid_argument("subgroup scale k must be in [0, n]");
    }
    const std::uint32_t guest_side = std::uint32_t{1} << (n - k);
    std::vector<TorusVertex> out;
    out.reserve(static_cast<std::size_t>(guest_side) * guest_side);
    for (std::uint32_t x = 0; x < guest_side; ++x) {
        for (std::uint32_t y = 0; y < guest_side; ++y) {
            out.push_back({x << k, y << k});
        }
    }
    return out;
}

/// Embedding of level n-k into level n by coordinate scaling: injective
/// group homomorphism mapping guest generators s to host offsets 2^k * s.
inline TorusVertex embed_scaled(int n, int k, const TorusVertex& guest) {
    Level level(n);
    if (k < 0 || k > n) {
        throw std::invalid_argument("embedding scale k must be in [0, n]");
    }
    const std::uint32_t guest_side = std::uint32_t{1} << (n - k);
    if (guest.x >= guest_side || guest.y >= guest_side) {
        throw std::invalid_argument("guest vertex " + to_string(guest) +
                                    " not canonical at level " + std::to_string(n - k));
    }
    return {guest.x << k, guest.y << k};
}

}  // namespace arrowhead
