// Acceptance gate: every published result is re-derived here end to end.
// One line per criterion; exits nonzero if any criterion fails.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <arrowhead/arrowhead.hpp>

#ifndef ARROWHEAD_CLI_PATH
#error "ARROWHEAD_CLI_PATH must point at the built binary"
#endif

using namespace arrowhead;

namespace {

struct Criterion {
    std::string description;
    std::function<bool(std::string&)> run;  // fills a detail string on failure
};

GraphSpec torus(int n) { return make_graph(n, Variant::arrowhead, Directedness::undirected); }
GraphSpec arrow_directed(int n) {
    return make_graph(n, Variant::arrowhead, Directedness::directed);
}
GraphSpec diamond_directed(int n) {
    return make_graph(n, Variant::diamond, Directedness::directed);
}

bool criterion_diameter_table(std::string& detail) {
    const std::vector<std::uint64_t> expected = {0, 1, 2, 5, 10, 21, 42, 85, 170, 341};
    const std::vector<std::uint64_t> recurrence = diameter_recurrence_table(9);
    for (int n = 0; n <= 9; ++n) {
        if (undirected_diameter(n) != expected[n] || recurrence[n] != expected[n]) {
            detail = "formula/recurrence mismatch at n=" + std::to_string(n);
            return false;
        }
        if (n <= 7) {
            const std::uint64_t oracle = diameter_oracle(torus(n));
            if (oracle != expected[n]) {
                detail = "oracle " + std::to_string(oracle) + " at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool criterion_relations(std::string& detail) {
    for (int n = 1; n <= 64; ++n) {
        if (undirected_diameter(n) != 2 * undirected_diameter(n - 1) + (n % 2)) {
            detail = "recurrence fails at n=" + std::to_string(n);
            return false;
        }
        const RelationCheck r = check_relations(n);
        if (!r.sum_identity) {
            detail = "sum identity fails at n=" + std::to_string(n);
            return false;
        }
        if (n >= 2 && !r.gap_identity.value()) {
            detail = "gap identity fails at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_directed_diameters(std::string& detail) {
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t expected = (std::uint64_t{1} << n) - 1;
        const std::uint64_t at = diameter_oracle(arrow_directed(n));
        const std::uint64_t dt = diameter_oracle(diamond_directed(n));
        if (at != expected || dt != expected ||
            directed_arrowhead_diameter(n) != expected ||
            directed_diamond_diameter(n) != expected) {
            detail = "n=" + std::to_string(n) + " arrowhead=" + std::to_string(at) +
                     " diamond=" + std::to_string(dt);
            return false;
        }
    }
    return true;
}

bool criterion_antipodal_counts(std::string& detail) {
    const std::size_t expected_t[] = {0, 3, 9, 6, 12, 6, 12, 6};
    const std::size_t expected_at[] = {0, 3, 6, 6, 6, 6, 6, 6};
    for (int n = 1; n <= 7; ++n) {
        const std::size_t t = antipodals_oracle(torus(n)).size();
        const std::size_t at = antipodals_oracle(arrow_directed(n)).size();
        const std::size_t dt = antipodals_oracle(diamond_directed(n)).size();
        const std::size_t expected_dt = (std::size_t{1} << (n + 1)) - 1;
        if (t != expected_t[n] || at != expected_at[n] || dt != expected_dt ||
            t != antipodal_count(Family::undirected_T, n) ||
            at != antipodal_count(Family::directed_AT, n) ||
            dt != antipodal_count(Family::directed_DT, n)) {
            detail = "n=" + std::to_string(n) + " counts T=" + std::to_string(t) +
                     " ATdir=" + std::to_string(at) + " DTdir=" + std::to_string(dt);
            return false;
        }
    }
    return true;
}

bool criterion_anchors(std::string& detail) {
    for (int n = 1; n <= 7; ++n) {
        const AntipodalSummary s = antipodal_anchor(n);
        const char expected_label = n % 2 == 1 ? 'C' : 'B';
        const std::vector<TorusVertex> antipodals = antipodals_oracle(torus(n));
        const std::uint32_t mask = Level(n).mask();
        const TorusVertex partner = {(s.anchor.x + 1) & mask, (s.anchor.y + 1) & mask};
        const auto in_set = [&](const TorusVertex& v) {
            return std::binary_search(antipodals.begin(), antipodals.end(), v);
        };
        if (s.label != expected_label || !in_set(s.anchor) || !in_set(s.anchor_swapped) ||
            !in_set(partner)) {
            detail = "n=" + std::to_string(n) + " anchor " + to_string(s.anchor);
            return false;
        }
    }
    return true;
}

bool criterion_diamond_shells(std::string& detail) {
    for (int n = 0; n <= 7; ++n) {
        const GraphSpec g = diamond_directed(n);
        const DistanceField field = bfs_from(g, {0, 0});
        const DistanceHistogram h = distance_histogram(field);
        if (h.counts.size() != (std::uint64_t{1} << n)) {
            detail = "shell count off at n=" + std::to_string(n);
            return false;
        }
        for (std::size_t p = 0; p < h.counts.size(); ++p) {
            if (h.counts[p] != 2 * p + 1) {
                detail = "shell " + std::to_string(p) + " at n=" + std::to_string(n);
                return false;
            }
        }
        for (std::uint64_t i = 0; i < g.vertex_count(); ++i) {
            const TorusVertex v = g.vertex_at(i);
            if (field.dist[i] != directed_diamond_distance(n, v)) {
                detail = "distance form off at n=" + std::to_string(n) + " v=" +
                         to_string(v);
                return false;
            }
        }
    }
    return true;
}

bool criterion_undirected_iso(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        const GraphSpec at = make_graph(n, Variant::arrowhead, Directedness::undirected);
        const GraphSpec dt = make_graph(n, Variant::diamond, Directedness::undirected);
        if (edge_list_lines(at) != edge_list_lines(dt)) {
            detail = "edge multisets differ at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_dilation(std::string& detail) {
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            const ClaimCheck c = check_embedding_dilation(n, k);
            if (!c.passed()) {
                detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " observed " + c.observed + " expected " + c.expected;
                return false;
            }
        }
    }
    // Literal per-edge sweep at one midsize level: every guest edge image must
    // land within 2^k, and the bound must be attained when the guest is nontrivial.
    const int n = 4;
    const GraphSpec host = torus(n);
    for (int k = 0; k <= n; ++k) {
        const GraphSpec guest = torus(n - k);
        const std::uint64_t bound = k < n ? (std::uint64_t{1} << k) : 0;
        std::uint64_t observed_max = 0;
        for (std::uint64_t i = 0; i < guest.vertex_count(); ++i) {
            const TorusVertex gu = guest.vertex_at(i);
            const DistanceField field = bfs_from(host, embed_scaled(n, k, gu));
            for (const TorusVertex& gv : guest.neighbors(gu)) {
                const std::uint64_t d = field.at(embed_scaled(n, k, gv));
                observed_max = std::max(observed_max, d);
                if (d > bound) {
                    detail = "edge " + to_string(gu) + "-" + to_string(gv) +
                             " dilates to " + std::to_string(d) + " at k=" +
                             std::to_string(k);
                    return false;
                }
            }
        }
        if (observed_max != bound) {
            detail = "max dilation " + std::to_string(observed_max) + " at k=" +
                     std::to_string(k) + ", expected " + std::to_string(bound);
            return false;
        }
    }
    return true;
}

bool criterion_transitivity(std::string& detail) {
    const std::uint64_t seed = 42;
    for (int n = 1; n <= 6; ++n) {
        int family_index = 0;
        for (const auto& [variant, directedness] :
             {std::pair{Variant::arrowhead, Directedness::undirected},
              std::pair{Variant::arrowhead, Directedness::directed},
              std::pair{Variant::diamond, Directedness::directed}}) {
            const GraphSpec g = make_graph(n, variant, directedness);
            const DistanceHistogram reference = distance_histogram(bfs_from(g, {0, 0}));
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (family_index + 1)) ^
                                (static_cast<std::uint64_t>(n) << 17));
            for (int i = 0; i < 8; ++i) {
                const TorusVertex origin = g.vertex_at(rng() % g.vertex_count());
                if (distance_histogram(bfs_from(g, origin)).counts != reference.counts) {
                    detail = "histogram differs from origin " + to_string(origin) +
                             " at n=" + std::to_string(n);
                    return false;
                }
            }
            ++family_index;
        }
    }
    return true;
}

bool criterion_deterministic_verify(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path report_a =
        fs::temp_directory_path() / ("acceptance_report_a_" + std::to_string(::getpid()));
    const fs::path report_b =
        fs::temp_directory_path() / ("acceptance_report_b_" + std::to_string(::getpid()));
    const auto run_verify = [](const fs::path& out) {
        const std::string cmd = std::string("\"") + ARROWHEAD_CLI_PATH +
                                "\" verify --n 1..6 --seed 42 --out " + out.string() +
                                " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const int code_a = run_verify(report_a);
    const int code_b = run_verify(report_b);
    const std::string bytes_a = slurp(report_a);
    const std::string bytes_b = slurp(report_b);
    fs::remove(report_a);
    fs::remove(report_b);
    if (code_a != 0 || code_b != 0) {
        detail = "verify exit codes " + std::to_string(code_a) + "/" + std::to_string(code_b);
        return false;
    }
    if (bytes_a.empty() || bytes_a != bytes_b) {
        detail = "reports differ or are empty";
        return false;
    }
    if (bytes_a.find("fail=0") == std::string::npos) {
        detail = "report carries failures";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"undirected diameter table (oracle to n=7, formulas to n=9)",
         criterion_diameter_table},
        {"consecutive-diameter relations exact to n=64", criterion_relations},
        {"directed diameters equal 2^n-1 (oracle, n=1..7)", criterion_directed_diameters},
        {"antipodal counts for all three families (oracle, n=1..7)",
         criterion_antipodal_counts},
        {"anchor pair, its swap, and partner are antipodal with correct labels (n=1..7)",
         criterion_anchors},
        {"diamond shells grow as 2p+1 and distance equals max(x,y) (n=0..7)",
         criterion_diamond_shells},
        {"undirected variants export identical edge multisets (n=1..6)",
         criterion_undirected_iso},
        {"scaled embeddings dilate distances by exactly 2^k (n=0..6, all k)",
         criterion_dilation},
        {"eight seeded origins reproduce the identity histogram (n=1..6, all families)",
         criterion_transitivity},
        {"verify CLI run twice is byte-identical and clean (n=1..6, seed 42)",
         criterion_deterministic_verify},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
                  << criteria[i].description;
        if (!ok && !detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
        failures += ok ? 0 : 1;
    }
    std::cout << "acceptance: " << criteria.size() - failures << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
