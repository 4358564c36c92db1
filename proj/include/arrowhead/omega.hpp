// omega.hpp — the distinguished antipodal triples of the undirected torus.
//
// Each level n carries a triple Omega_n = (A_n, B_n, C_n) of mutually
// adjacent antipodal vertices. Two members have closed-form coordinates:
// the anchor (D_{n-1}, D_n) and its partner anchor + (1,1); for odd n the
// anchor is labeled C and the partner B, for even n the roles swap. The
// third member A_n is resolved against the BFS oracle: of the two triangle
// completions of the anchor/partner edge, exactly the completion with both
// coordinates odd is antipodal at every level (the even-coordinate
// completion lies in the index-4 subgroup and is antipodal only at even n,
// where it coincides with the doubled child triple).
//
// Scaled copies: doubling the coordinates of Omega_{n-1} (resp. quadrupling
// Omega_{n-2}) produces Omega_{n,1} (resp. Omega_{n,2}) inside the subgroup
// 2*G_{n-1} (resp. 4*G_{n-2}); coordinate-wise negation produces the
// mirrored triples. Scaled copies are antipodal in the host exactly at even
// host levels.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "formulas.hpp"
#include "metrics.hpp"

namespace arrowhead {

enum class OmegaKind { base, bar, scaled1, bar_scaled1, scaled2, bar_scaled2 };

struct OmegaTriple {
    OmegaKind kind = OmegaKind::base;
    int n = 0;  // host level: members are vertices of G_n
    TorusVertex a, b, c;

    std::array<TorusVertex, 3> members() const { return {a, b, c}; }

    friend bool operator==(const OmegaTriple&, const OmegaTriple&) = default;
};

inline std::string to_string(const OmegaTriple& t) {
    std::string label = "omega";
    switch (t.kind) {
        case OmegaKind::base: break;
        case OmegaKind::bar: label += "_bar"; break;
        case OmegaKind::scaled1:
        case OmegaKind::scaled2: break;
        case OmegaKind::bar_scaled1:
        case OmegaKind::bar_scaled2: label += "_bar"; break;
    }
    label += "_" + std::to_string(t.n);
    if (t.kind == OmegaKind::scaled1 || t.kind == OmegaKind::bar_scaled1) label += "_1";
    if (t.kind == OmegaKind::scaled2 || t.kind == OmegaKind::bar_scaled2) label += "_2";
    return label;
}

/// The base triple Omega_n. Levels 0 and 1 are fixed seed triples; levels
/// >= 2 take the anchor pair from the diameter formulas and resolve the
/// third member against a BFS sweep of the undirected torus.
inline OmegaTriple omega_triple(int n, int max_level = kDefaultMaxLevel) {
    if (n < 0) throw std::invalid_argument("omega_triple requires n >= 0");
    if (n == 0) return {OmegaKind::base, 0, {0, 0}, {0, 0}, {0, 0}};
    if (n == 1) return {OmegaKind::base, 1, {1, 1}, {1, 0}, {0, 1}};

    const AntipodalSummary anchor = antipodal_anchor(n);
    const TorusVertex anchor_v = anchor.anchor;
    const std::uint32_t mask = Level(n).mask();
    const TorusVertex partner = {(anchor_v.x + 1) & mask, (anchor_v.y + 1) & mask};

    // Triangle completions of the anchor/partner edge. The first listed has
    // both coordinates odd and never lies in 2*G_{n-1}.
    const TorusVertex odd_completion = n % 2 == 1
                                           ? TorusVertex{(anchor_v.x + 1) & mask, anchor_v.y}
                                           : TorusVertex{anchor_v.x, (anchor_v.y + 1) & mask};
    const TorusVertex even_completion = n % 2 == 1
                                            ? TorusVertex{anchor_v.x, (anchor_v.y + 1) & mask}
                                            : TorusVertex{(anchor_v.x + 1) & mask, anchor_v.y};

    const GraphSpec host = make_graph(n, Variant::arrowhead, Directedness::undirected, max_level);
    const DistanceField field = bfs_from(host, {0, 0});
    const std::uint32_t diameter = eccentricity(field);
    if (field.at(anchor_v) != diameter || field.at(partner) != diameter) {
        throw std::logic_error("anchor pair not antipodal at level " + std::to_string(n));
    }

    // Prefer the completion outside the index-4 subgroup; both candidates
    // antipodal can only happen when the scaled child is antipodal too, and
    // the triple member is still the odd one.
    TorusVertex third;
    if (field.at(odd_completion) == diameter) {
        third = odd_completion;
    } else if (field.at(even_completion) == diameter) {
        third = even_completion;
    } else {
        throw std::logic_error("no antipodal completion at level " + std::to_string(n));
    }

    OmegaTriple t;
    t.kind = OmegaKind::base;
    t.n = n;
    t.a = third;
    if (n % 2 == 1) {
        t.c = anchor_v;  // odd levels: anchor is C, partner is B
        t.b = partner;
    } else {
        t.b = anchor_v;  // even levels: anchor is B, partner is C
        t.c = partner;
    }
    return t;
}

/// Coordinate-wise negation mod 2^n; labels map through position-wise.
inline OmegaTriple omega_negated(const OmegaTriple& t) {
    const std::uint32_t side = Level(t.n).side();
    const auto neg = [side](const TorusVertex& v) -> TorusVertex {
        return {static_cast<std::uint32_t>((side - v.x) & (side - 1)),
                static_cast<std::uint32_t>((side - v.y) & (side - 1))};
    };
    OmegaKind kind;
    switch (t.kind) {
        case OmegaKind::base: kind = OmegaKind::bar; break;
        case OmegaKind::bar: kind = OmegaKind::base; break;
        case OmegaKind::scaled1: kind = OmegaKind::bar_scaled1; break;
        case OmegaKind::bar_scaled1: kind = OmegaKind::scaled1; break;
        case OmegaKind::scaled2: kind = OmegaKind::bar_scaled2; break;
        case OmegaKind::bar_scaled2: kind = OmegaKind::scaled2; break;
        default: throw std::logic_error("unreachable omega kind");
    }
    return {kind, t.n, neg(t.a), neg(t.b), neg(t.c)};
}

/// Doubles every coordinate, moving the triple one level up (into the
/// doubled subgroup of the larger torus). base -> scaled1 -> scaled2.
inline OmegaTriple omega_doubled(const OmegaTriple& t) {
    OmegaKind kind;
    switch (t.kind) {
        case OmegaKind::base: kind = OmegaKind::scaled1; break;
        case OmegaKind::scaled1: kind = OmegaKind::scaled2; break;
        case OmegaKind::bar: kind = OmegaKind::bar_scaled1; break;
        case OmegaKind::bar_scaled1: kind = OmegaKind::bar_scaled2; break;
        default: throw std::invalid_argument("triple cannot be scaled past two levels");
    }
    Level host(t.n + 1);  // validates representability
    const auto dbl = [](const TorusVertex& v) -> TorusVertex { return {v.x * 2, v.y * 2}; };
    return {kind, host.n(), dbl(t.a), dbl(t.b), dbl(t.c)};
}

/// All distinguished triples living in G_n, in fixed order:
/// Omega_n, its negation, then the doubled child and quadrupled grandchild
/// with their negations, as far as levels permit (2, 4, or 6 triples).
inline std::vector<OmegaTriple> omega_subsets(int n, int max_level = kDefaultMaxLevel) {
    std::vector<OmegaTriple> out;
    const OmegaTriple base = omega_triple(n, max_level);
    out.push_back(base);
    out.push_back(omega_negated(base));
    if (n >= 1) {
        const OmegaTriple child = omega_doubled(omega_triple(n - 1, max_level));
        out.push_back(child);
        out.push_back(omega_negated(child));
    }
    if (n >= 2) {
        const OmegaTriple grandchild =
            omega_doubled(omega_doubled(omega_triple(n - 2, max_level)));
        out.push_back(grandchild);
        out.push_back(omega_negated(grandchild));
    }
    return out;
}

}  // namespace arrowhead
