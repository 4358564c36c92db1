// formulas.hpp — closed forms for diameters and antipodal structure.
//
// Pure integer arithmetic, valid up to n = 64 without building any graph.
// Every closed form here is cross-checked against the BFS oracles by the
// verification sweep and the test suite.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <optional>
#include <vector>

#include "cayley.hpp"

namespace arrowhead {

/// The three graph families measured by this library.
enum class Family { undirected_T, directed_AT, directed_DT };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::undirected_T: return "T";
        case Family::directed_AT: return "ATdir";
        case Family::directed_DT: return "DTdir";
    }
    throw std::logic_error("unreachable family");
}

inline Family family_from_string(const std::string& s) {
    if (s == "T") return Family::undirected_T;
    if (s == "ATdir") return Family::directed_AT;
    if (s == "DTdir") return Family::directed_DT;
    throw std::invalid_argument("unknown family token: " + s);
}

inline Family family_of(Variant variant, Directedness directedness) {
    if (directedness == Directedness::undirected) return Family::undirected_T;
    return variant == Variant::arrowhead ? Family::directed_AT : Family::directed_DT;
}

namespace detail {

inline void require_range(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi) {
        throw std::invalid_argument(std::string(what) + " requires n in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) +
                                    "], got " + std::to_string(n));
    }
}

/// 2^k - 1 without overflow for k in [0, 64].
inline std::uint64_t pow2_minus_one(int k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

/// Exact division guard: these quotients are integral by parity, and a
// failed division would mean a formula bug, not bad input.
inline std::uint64_t exact_div3(std::uint64_t v) {
    if (v % 3 != 0) throw std::logic_error("expected multiple of 3: " + std::to_string(v));
    return v / 3;
}

}  // namespace detail

/// Diameter of the undirected torus at level n:
///   (2*2^n - 1)/3 for odd n, 2*(2^n - 1)/3 for even n.
/// Valid for n in [0, 64] (the n = 64 value still fits in 64 bits).
inline std::uint64_t undirected_diameter(int n) {
    detail::require_range(n, 0, 64, "undirected_diameter");
    if (n % 2 == 1) {
        // 2*2^n - 1 == 2^(n+1) - 1, divisible by 3 since n+1 is even.
        return detail::exact_div3(detail::pow2_minus_one(n + 1));
    }
    return 2 * detail::exact_div3(detail::pow2_minus_one(n));
}

/// Diameters D_0..D_n via the recurrence D_p = 2*D_{p-1} + (p mod 2).
inline std::vector<std::uint64_t> diameter_recurrence_table(int n_max) {
    detail::require_range(n_max, 0, 64, "diameter_recurrence_table");
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n_max) + 1);
    table[0] = 0;
    for (int p = 1; p <= n_max; ++p) table[p] = 2 * table[p - 1] + (p % 2);
    return table;
}

/// Consistency relations between consecutive diameters:
///   sum_identity: D_{n-1} + D_n == 2^n - 1           (n >= 1)
///   gap_identity: D_n - D_{n-2} == 2^(n-1)           (n >= 2, else nullopt)
struct RelationCheck {
    bool sum_identity = false;
    std::optional<bool> gap_identity;
};

inline RelationCheck check_relations(int n) {
    detail::require_range(n, 1, 64, "check_relations");
    RelationCheck r;
    r.sum_identity =
        undirected_diameter(n - 1) + undirected_diameter(n) == detail::pow2_minus_one(n);
    if (n >= 2) {
        r.gap_identity = undirected_diameter(n) - undirected_diameter(n - 2) ==
                         std::uint64_t{1} << (n - 1);
    }
    return r;
}

/// Directed arrowhead diameter: 2^n - 1.
inline std::uint64_t directed_arrowhead_diameter(int n) {
    detail::require_range(n, 0, 64, "directed_arrowhead_diameter");
    return detail::pow2_minus_one(n);
}

/// Directed diamond diameter: 2^n - 1 (equal to the arrowhead value; the two
/// directed graphs are isomorphic via negation of one coordinate frame).
inline std::uint64_t directed_diamond_diameter(int n) {
    detail::require_range(n, 0, 64, "directed_diamond_diameter");
    return detail::pow2_minus_one(n);
}

/// Closed-form directed diamond distance from the identity: max(x, y) on
/// canonical residues. Oracle-validated across the supported range.
inline std::uint32_t directed_diamond_distance(int n, const TorusVertex& v) {
    detail::require_range(n, 0, kMaxRepresentableLevel, "directed_diamond_distance");
    const std::uint32_t side = std::uint32_t{1} << n;
    if (v.x >= side || v.y >= side) {
        throw std::invalid_argument("vertex " + to_string(v) + " not canonical at level " +
                                    std::to_string(n));
    }
    return v.x > v.y ? v.x : v.y;
}

/// Number of antipodal vertices (vertices at distance exactly the diameter
/// from the identity).
///   T:      3 (n=1), 9 (n=2), then 6 for odd n and 12 for even n
///   ATdir:  3 (n=1), then 6
///   DTdir:  2^(n+1) - 1 (the full outer shell), defined from n = 0
/// For T and ATdir the count is undefined at n = 0 (the only vertex is the
/// identity itself); pass allow_trivial to get 1 for that degenerate case.
inline std::uint64_t antipodal_count(Family family, int n, bool allow_trivial = false) {
    if (family == Family::directed_DT) {
        detail::require_range(n, 0, 63, "antipodal_count(DTdir)");
        return detail::pow2_minus_one(n + 1);
    }
    if (n == 0 && allow_trivial) return 1;
    detail::require_range(n, 1, 64, "antipodal_count");
    if (family == Family::directed_AT) return n == 1 ? 3 : 6;
    if (n == 1) return 3;
    if (n == 2) return 9;
    return n % 2 == 1 ? 6 : 12;
}

/// The anchor antipodal vertex (D_{n-1}, D_n) of the undirected torus, with
/// its triple label: 'C' for odd n, 'B' for even n. Its coordinate swap
/// (D_n, D_{n-1}) is antipodal as well and carries the mirrored label.
struct AntipodalSummary {
    int n = 0;
    TorusVertex anchor;          // (D_{n-1}, D_n)
    TorusVertex anchor_swapped;  // (D_n, D_{n-1})
    char label = '?';            // label of `anchor` within the distinguished triple
};

inline AntipodalSummary antipodal_anchor(int n) {
    detail::require_range(n, 1, kMaxRepresentableLevel, "antipodal_anchor");
    const auto lo = static_cast<std::uint32_t>(undirected_diameter(n - 1));
    const auto hi = static_cast<std::uint32_t>(undirected_diameter(n));
    AntipodalSummary s;
    s.n = n;
    s.anchor = {lo, hi};
    s.anchor_swapped = {hi, lo};
    s.label = n % 2 == 1 ? 'C' : 'B';
    return s;
}

}  // namespace arrowhead
