// verify.hpp — claim registry and verification sweep.
//
// Each claim pits a closed-form prediction against an exact BFS oracle (or,
// for formula-only claims, against an independent recurrence). A sweep runs
// the selected claims over a level range and produces a report whose
// serialized form is byte-deterministic for fixed options: timings are kept
// out of the serialization, and the only randomness (spot-check origins) is
// drawn from a seed recorded in the report.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "formulas.hpp"
#include "metrics.hpp"
#include "omega.hpp"

namespace arrowhead {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kTransitivitySamples = 8;

struct ClaimCheck {
    enum class Result { pass, fail, skip };

    std::string claim_id;
    Family family = Family::undirected_T;
    int n = 0;
    std::string provenance;  // "paper" (closed form from the source results)
                             // or "derived" (value fixed by oracle computation)
    std::string expected;
    std::string observed;
    Result result = Result::skip;
    std::string note;      // skip reason or auxiliary observation
    double wall_ms = 0.0;  // informational only; never serialized

    bool passed() const { return result == Result::pass; }
};

inline const char* to_string(ClaimCheck::Result r) {
    switch (r) {
        case ClaimCheck::Result::pass: return "pass";
        case ClaimCheck::Result::fail: return "fail";
        case ClaimCheck::Result::skip: return "skip";
    }
    throw std::logic_error("unreachable result");
}

struct SweepOptions {
    int n_min = 1;
    int n_max = 8;
    std::vector<Family> families = {Family::undirected_T, Family::directed_AT,
                                    Family::directed_DT};
    std::vector<std::string> claims;  // empty selects every registered claim
    std::uint64_t seed = 0;
    int max_level = kDefaultMaxLevel;  // oracle claims above this are skipped
};

struct VerificationReport {
    std::string tool_version = kToolVersion;
    int n_min = 0;
    int n_max = 0;
    std::vector<Family> families;
    std::vector<std::string> claims;  // resolved claim ids in registry order
    std::uint64_t seed = 0;
    std::vector<ClaimCheck> checks;

    std::size_t count(ClaimCheck::Result r) const {
        std::size_t c = 0;
        for (const ClaimCheck& chk : checks) c += chk.result == r ? 1 : 0;
        return c;
    }
    std::size_t passed() const { return count(ClaimCheck::Result::pass); }
    std::size_t failed() const { return count(ClaimCheck::Result::fail); }
    std::size_t skipped() const { return count(ClaimCheck::Result::skip); }
    bool all_passed() const { return failed() == 0; }
};

namespace verify_detail {

inline std::string vertex_str(const TorusVertex& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

inline std::string set_str(std::vector<TorusVertex> vs) {
    std::sort(vs.begin(), vs.end());
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += vertex_str(vs[i]);
    }
    return out + "}";
}

inline std::string vec_str(const std::vector<std::uint64_t>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "]";
}

inline ClaimCheck base_check(const char* id, Family family, int n, const char* provenance) {
    ClaimCheck c;
    c.claim_id = id;
    c.family = family;
    c.n = n;
    c.provenance = provenance;
    return c;
}

inline void settle(ClaimCheck& c) {
    c.result = c.expected == c.observed ? ClaimCheck::Result::pass : ClaimCheck::Result::fail;
}

inline GraphSpec family_graph(Family family, int n, int max_level) {
    switch (family) {
        case Family::undirected_T:
            return make_graph(n, Variant::arrowhead, Directedness::undirected, max_level);
        case Family::directed_AT:
            return make_graph(n, Variant::arrowhead, Directedness::directed, max_level);
        case Family::directed_DT:
            return make_graph(n, Variant::diamond, Directedness::directed, max_level);
    }
    throw std::logic_error("unreachable family");
}

// --- claim runners ------------------------------------------------------

inline ClaimCheck run_diameter(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check(family == Family::undirected_T      ? "Tn.diameter"
                              : family == Family::directed_AT    ? "ATdir.diameter"
                                                                 : "DTdir.diameter",
                              family, n, "paper");
    std::uint64_t predicted = 0;
    switch (family) {
        case Family::undirected_T: predicted = undirected_diameter(n); break;
        case Family::directed_AT: predicted = directed_arrowhead_diameter(n); break;
        case Family::directed_DT: predicted = directed_diamond_diameter(n); break;
    }
    c.expected = std::to_string(predicted);
    c.observed = std::to_string(diameter_oracle(family_graph(family, n, opts.max_level)));
    settle(c);
    return c;
}

inline ClaimCheck run_recurrence(Family family, int n, const SweepOptions&) {
    ClaimCheck c = base_check("Tn.recurrence", family, n, "paper");
    c.expected = std::to_string(undirected_diameter(n));
    c.observed = std::to_string(diameter_recurrence_table(n).back());
    settle(c);
    return c;
}

inline ClaimCheck run_relation_sum(Family family, int n, const SweepOptions&) {
    ClaimCheck c = base_check("relations.eq3", family, n, "paper");
    c.expected = "true";
    c.observed = check_relations(n).sum_identity ? "true" : "false";
    c.note = "D(n-1)+D(n) vs 2^n-1";
    settle(c);
    return c;
}

inline ClaimCheck run_relation_gap(Family family, int n, const SweepOptions&) {
    ClaimCheck c = base_check("relations.eq4", family, n, "paper");
    c.expected = "true";
    c.observed = check_relations(n).gap_identity.value() ? "true" : "false";
    c.note = "D(n)-D(n-2) vs 2^(n-1)";
    settle(c);
    return c;
}

inline ClaimCheck run_antipodal_count(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check(family == Family::undirected_T      ? "Tn.antipodal_count"
                              : family == Family::directed_AT    ? "ATdir.antipodal_count"
                                                                 : "DTdir.antipodal_count",
                              family, n, "paper");
    c.expected = std::to_string(antipodal_count(family, n));
    c.observed =
        std::to_string(antipodals_oracle(family_graph(family, n, opts.max_level)).size());
    settle(c);
    return c;
}

inline ClaimCheck run_anchor(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("Tn.anchor", family, n, "paper");
    const AntipodalSummary s = antipodal_anchor(n);
    const std::vector<TorusVertex> antipodals =
        antipodals_oracle(family_graph(family, n, opts.max_level));
    const bool anchor_in = std::binary_search(antipodals.begin(), antipodals.end(), s.anchor);
    const bool swap_in =
        std::binary_search(antipodals.begin(), antipodals.end(), s.anchor_swapped);
    c.expected = "true";
    c.observed = anchor_in && swap_in ? "true" : "false";
    c.note = "anchor=" + vertex_str(s.anchor) + " swap=" + vertex_str(s.anchor_swapped) +
             " label=" + std::string(1, s.label);
    settle(c);
    return c;
}

/// Predicted antipodal set of the undirected torus: the base triple and its
/// negation always; the doubled child triple and its negation exactly at
/// even levels. Compared for set equality against the oracle, so a stray or
/// missing scaled member fails the claim.
inline ClaimCheck run_omega_membership(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("omega.membership", family, n, "derived");
    const std::vector<OmegaTriple> triples = omega_subsets(n, opts.max_level);
    std::set<TorusVertex> predicted;
    for (const OmegaTriple& t : triples) {
        const bool scaled1 =
            t.kind == OmegaKind::scaled1 || t.kind == OmegaKind::bar_scaled1;
        const bool scaled2 =
            t.kind == OmegaKind::scaled2 || t.kind == OmegaKind::bar_scaled2;
        if (scaled2) continue;               // never antipodal in the host
        if (scaled1 && n % 2 == 1) continue;  // child triple antipodal only at even levels
        for (const TorusVertex& v : t.members()) predicted.insert(v);
    }
    const GraphSpec host = family_graph(Family::undirected_T, n, opts.max_level);
    const DistanceField field = bfs_from(host, {0, 0});
    const std::uint32_t diameter = eccentricity(field);
    std::vector<TorusVertex> observed;
    for (std::uint64_t i = 0; i < field.dist.size(); ++i) {
        if (field.dist[i] == diameter) observed.push_back(host.vertex_at(i));
    }
    c.expected = set_str({predicted.begin(), predicted.end()});
    c.observed = set_str(observed);
    if (n >= 3 && n % 2 == 1) {
        // Open question upstream: at odd levels the child triple is not
        // antipodal; record its observed distance instead of asserting one.
        for (const OmegaTriple& t : triples) {
            if (t.kind == OmegaKind::scaled1) {
                c.note = to_string(t) + " at distance " + std::to_string(field.at(t.a)) +
                         " of diameter " + std::to_string(diameter);
            }
        }
    }
    settle(c);
    return c;
}

/// The two undirected variants generate the same graph: identical sorted
/// neighbor multisets at every vertex.
inline ClaimCheck run_iso(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("iso.AT_DT", family, n, "paper");
    const GraphSpec at = make_graph(n, Variant::arrowhead, Directedness::undirected,
                                    opts.max_level);
    const GraphSpec dt = make_graph(n, Variant::diamond, Directedness::undirected,
                                    opts.max_level);
    std::uint64_t mismatches = 0;
    for (std::uint64_t i = 0; i < at.vertex_count(); ++i) {
        std::vector<TorusVertex> a = at.neighbors(at.vertex_at(i));
        std::vector<TorusVertex> d = dt.neighbors(dt.vertex_at(i));
        std::sort(a.begin(), a.end());
        std::sort(d.begin(), d.end());
        if (a != d) ++mismatches;
    }
    c.expected = "equal";
    c.observed = mismatches == 0 ? "equal" : "mismatch=" + std::to_string(mismatches);
    c.note = "arcs=" + std::to_string(at.arc_slots());
    settle(c);
    return c;
}

/// Scaled embeddings stretch guest distances by exactly 2^k for k < n; the
/// k = n guest collapses to the identity (dilation 0 by convention).
inline ClaimCheck run_embed_dilation(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("embed.dilation", family, n, "paper");
    const GraphSpec host = family_graph(Family::undirected_T, n, opts.max_level);
    const DistanceField field = bfs_from(host, {0, 0});
    std::vector<std::uint64_t> expected_by_k, observed_by_k;
    for (int k = 0; k <= n; ++k) {
        expected_by_k.push_back(k < n ? (std::uint64_t{1} << k) : 0);
        const GraphSpec guest(Level(n - k), Variant::arrowhead, Directedness::undirected);
        std::uint32_t dilation = 0;
        for (const TorusVertex& s : guest.neighbors({0, 0})) {
            dilation = std::max(dilation, field.at(embed_scaled(n, k, s)));
        }
        observed_by_k.push_back(dilation);
    }
    c.expected = vec_str(expected_by_k);
    c.observed = vec_str(observed_by_k);
    c.note = "per k=0..n; k=n guest is a single vertex";
    settle(c);
    return c;
}

/// Vertex-transitivity spot check: seeded sample origins must reproduce the
/// identity's distance histogram exactly.
inline ClaimCheck run_transitivity(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("transitivity.sample", family, n, "paper");
    const GraphSpec g = family_graph(family, n, opts.max_level);
    const DistanceHistogram reference = distance_histogram(bfs_from(g, {0, 0}));
    std::uint64_t mix = opts.seed;
    mix ^= 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(family) + 1);
    mix ^= static_cast<std::uint64_t>(n) * 0x100000001b3ULL;
    std::mt19937_64 rng(mix);
    int matching = 0;
    for (int i = 0; i < kTransitivitySamples; ++i) {
        const TorusVertex origin = g.vertex_at(rng() % g.vertex_count());
        if (distance_histogram(bfs_from(g, origin)).counts == reference.counts) ++matching;
    }
    c.expected = std::to_string(kTransitivitySamples) + "/" +
                 std::to_string(kTransitivitySamples);
    c.observed = std::to_string(matching) + "/" + std::to_string(kTransitivitySamples);
    settle(c);
    return c;
}

inline ClaimCheck run_antipodal_set_at(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("ATdir.antipodal_set", family, n, "derived");
    const OmegaTriple base = omega_triple(n, opts.max_level);
    const OmegaTriple bar = omega_negated(base);
    std::set<TorusVertex> predicted;
    for (const TorusVertex& v : base.members()) predicted.insert(v);
    for (const TorusVertex& v : bar.members()) predicted.insert(v);
    c.expected = set_str({predicted.begin(), predicted.end()});
    c.observed = set_str(antipodals_oracle(family_graph(family, n, opts.max_level)));
    settle(c);
    return c;
}

inline ClaimCheck run_shells(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("DTdir.shells", family, n, "paper");
    std::vector<std::uint64_t> predicted;
    const std::uint64_t diameter = directed_diamond_diameter(n);
    for (std::uint64_t p = 0; p <= diameter; ++p) predicted.push_back(2 * p + 1);
    const DistanceHistogram h =
        distance_histogram(bfs_from(family_graph(family, n, opts.max_level), {0, 0}));
    c.expected = vec_str(predicted);
    c.observed = vec_str(h.counts);
    settle(c);
    return c;
}

inline ClaimCheck run_distance_form(Family family, int n, const SweepOptions& opts) {
    ClaimCheck c = base_check("DTdir.distance_form", family, n, "derived");
    const GraphSpec g = family_graph(family, n, opts.max_level);
    const DistanceField field = bfs_from(g, {0, 0});
    std::uint64_t matching = 0;
    for (std::uint64_t i = 0; i < field.dist.size(); ++i) {
        const TorusVertex v = g.vertex_at(i);
        if (field.dist[i] == directed_diamond_distance(n, v)) ++matching;
    }
    c.expected = std::to_string(g.vertex_count());
    c.observed = std::to_string(matching);
    c.note = "vertices where distance equals max(x,y)";
    settle(c);
    return c;
}

// --- registry -----------------------------------------------------------

struct ClaimSpec {
    const char* id;
    Family family;
    bool needs_graph;  // oracle claims skip above the level ceiling
    int min_n;         // below this the claim is undefined (skipped)
    ClaimCheck (*run)(Family, int, const SweepOptions&);
};

inline const std::vector<ClaimSpec>& registry() {
    static const std::vector<ClaimSpec> r = {
        {"Tn.diameter", Family::undirected_T, true, 0, &run_diameter},
        {"Tn.recurrence", Family::undirected_T, false, 0, &run_recurrence},
        {"relations.eq3", Family::undirected_T, false, 1, &run_relation_sum},
        {"relations.eq4", Family::undirected_T, false, 2, &run_relation_gap},
        {"Tn.antipodal_count", Family::undirected_T, true, 1, &run_antipodal_count},
        {"Tn.anchor", Family::undirected_T, true, 1, &run_anchor},
        {"omega.membership", Family::undirected_T, true, 0, &run_omega_membership},
        {"iso.AT_DT", Family::undirected_T, true, 0, &run_iso},
        {"embed.dilation", Family::undirected_T, true, 0, &run_embed_dilation},
        {"transitivity.sample", Family::undirected_T, true, 0, &run_transitivity},
        {"ATdir.diameter", Family::directed_AT, true, 0, &run_diameter},
        {"ATdir.antipodal_count", Family::directed_AT, true, 1, &run_antipodal_count},
        {"ATdir.antipodal_set", Family::directed_AT, true, 1, &run_antipodal_set_at},
        {"transitivity.sample", Family::directed_AT, true, 0, &run_transitivity},
        {"DTdir.diameter", Family::directed_DT, true, 0, &run_diameter},
        {"DTdir.antipodal_count", Family::directed_DT, true, 0, &run_antipodal_count},
        {"DTdir.shells", Family::directed_DT, true, 0, &run_shells},
        {"DTdir.distance_form", Family::directed_DT, true, 0, &run_distance_form},
        {"transitivity.sample", Family::directed_DT, true, 0, &run_transitivity},
    };
    return r;
}

inline std::vector<std::string> all_claim_ids() {
    std::vector<std::string> ids;
    for (const ClaimSpec& spec : registry()) {
        if (std::find(ids.begin(), ids.end(), spec.id) == ids.end()) ids.push_back(spec.id);
    }
    return ids;
}

}  // namespace verify_detail

/// Standalone claim runners (also part of every full sweep).
inline ClaimCheck check_omega_antipodality(int n, int max_level = kDefaultMaxLevel) {
    SweepOptions opts;
    opts.max_level = max_level;
    return verify_detail::run_omega_membership(Family::undirected_T, n, opts);
}

/// Measured dilation of the level-(n-k) embedding into level n: the maximum
/// host distance across images of guest generator steps. Expected 2^k for
/// k < n and 0 for the degenerate k = n guest.
inline ClaimCheck check_embedding_dilation(int n, int k, int max_level = kDefaultMaxLevel) {
    Level level(n);
    if (k < 0 || k > n) throw std::invalid_argument("embedding scale k must be in [0, n]");
    ClaimCheck c = verify_detail::base_check("embed.dilation", Family::undirected_T, n, "paper");
    const GraphSpec host = make_graph(n, Variant::arrowhead, Directedness::undirected, max_level);
    const DistanceField field = bfs_from(host, {0, 0});
    const GraphSpec guest(Level(n - k), Variant::arrowhead, Directedness::undirected);
    std::uint32_t dilation = 0;
    for (const TorusVertex& s : guest.neighbors({0, 0})) {
        dilation = std::max(dilation, field.at(embed_scaled(n, k, s)));
    }
    c.expected = std::to_string(k < n ? (std::uint64_t{1} << k) : 0);
    c.observed = std::to_string(dilation);
    c.note = "k=" + std::to_string(k);
    verify_detail::settle(c);
    return c;
}

/// Runs the selected claims for every level in [n_min, n_max]. Oracle-backed
/// claims above the level ceiling are reported as skipped, never silently
/// dropped; formula-only claims run up to n = 64.
inline VerificationReport run_sweep(const SweepOptions& opts) {
    if (opts.n_min < 0 || opts.n_min > opts.n_max) {
        throw std::invalid_argument("bad level range");
    }
    if (opts.n_max > 64) throw std::invalid_argument("level range limited to n <= 64");
    if (opts.max_level < 0 || opts.max_level > kMaxRepresentableLevel) {
        throw std::invalid_argument("level ceiling must be in [0, " +
                                    std::to_string(kMaxRepresentableLevel) + "]");
    }
    if (opts.families.empty()) throw std::invalid_argument("no families selected");

    const std::vector<std::string> known = verify_detail::all_claim_ids();
    std::vector<std::string> selected = opts.claims.empty() ? known : opts.claims;
    for (const std::string& id : selected) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            std::string valid;
            for (const std::string& k : known) valid += (valid.empty() ? "" : ", ") + k;
            throw std::invalid_argument("unknown claim '" + id + "'; known claims: " + valid);
        }
    }

    VerificationReport report;
    report.n_min = opts.n_min;
    report.n_max = opts.n_max;
    report.families = opts.families;
    report.seed = opts.seed;
    for (const std::string& id : known) {
        if (std::find(selected.begin(), selected.end(), id) != selected.end()) {
            report.claims.push_back(id);
        }
    }

    const auto family_selected = [&](Family f) {
        return std::find(opts.families.begin(), opts.families.end(), f) != opts.families.end();
    };
    for (const verify_detail::ClaimSpec& spec : verify_detail::registry()) {
        if (!family_selected(spec.family)) continue;
        if (std::find(report.claims.begin(), report.claims.end(), spec.id) ==
            report.claims.end()) {
            continue;
        }
        for (int n = opts.n_min; n <= opts.n_max; ++n) {
            ClaimCheck check = verify_detail::base_check(spec.id, spec.family, n, "-");
            if (n < spec.min_n) {
                check.expected = "-";
                check.observed = "-";
                check.result = ClaimCheck::Result::skip;
                check.note = "skipped: undefined at this level";
            } else if (spec.needs_graph && n > opts.max_level) {
                check.expected = "-";
                check.observed = "-";
                check.result = ClaimCheck::Result::skip;
                check.note = "skipped: level above resource ceiling " +
                             std::to_string(opts.max_level);
            } else {
                const auto start = std::chrono::steady_clock::now();
                check = spec.run(spec.family, n, opts);
                check.wall_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
            }
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

inline std::string families_to_string(const std::vector<Family>& families) {
    std::string out;
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (i) out += ",";
        out += to_string(families[i]);
    }
    return out;
}

/// Machine-readable serialization. Byte-deterministic for fixed options:
/// excludes timings and anything host-specific.
inline std::string serialize_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "arrowhead verification report v1\n";
    out << "tool_version: " << report.tool_version << "\n";
    out << "n_range: " << report.n_min << ".." << report.n_max << "\n";
    out << "families: " << families_to_string(report.families) << "\n";
    out << "claims: ";
    for (std::size_t i = 0; i < report.claims.size(); ++i) {
        out << (i ? "," : "") << report.claims[i];
    }
    out << "\n";
    out << "seed: " << report.seed << "\n";
    for (const ClaimCheck& c : report.checks) {
        out << "check: claim=" << c.claim_id << " family=" << to_string(c.family)
            << " n=" << c.n << " provenance=" << c.provenance
            << " result=" << to_string(c.result) << " expected=" << c.expected
            << " observed=" << c.observed;
        if (!c.note.empty()) out << " note=\"" << c.note << "\"";
        out << "\n";
    }
    out << "summary: checks=" << report.checks.size() << " pass=" << report.passed()
        << " fail=" << report.failed() << " skip=" << report.skipped() << "\n";
    return out.str();
}

/// Fixed-width table for terminals; same content as the serialization.
inline std::string format_report_table(const VerificationReport& report) {
    const auto clip = [](const std::string& s) {
        constexpr std::size_t width = 34;
        return s.size() <= width ? s : s.substr(0, width - 3) + "...";
    };
    std::ostringstream out;
    const auto pad = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };
    out << pad("claim", 22) << pad("family", 7) << pad("n", 4) << pad("result", 7)
        << pad("expected", 36) << "observed\n";
    for (const ClaimCheck& c : report.checks) {
        out << pad(c.claim_id, 22) << pad(to_string(c.family), 7)
            << pad(std::to_string(c.n), 4) << pad(to_string(c.result), 7)
            << pad(clip(c.expected), 36) << clip(c.observed) << "\n";
    }
    out << "checks=" << report.checks.size() << " pass=" << report.passed()
        << " fail=" << report.failed() << " skip=" << report.skipped() << "\n";
    return out.str();
}

}  // namespace arrowhead
