#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <arrowhead/cayley.hpp>

using namespace arrowhead;

TEST_CASE("level validates and derives constants") {
    Level l3(3);
    CHECK(l3.n() == 3);
    CHECK(l3.side() == 8);
    CHECK(l3.mask() == 7);
    CHECK(l3.order() == 64);

    CHECK(Level(0).order() == 1);
    CHECK(Level(0).mask() == 0);
    CHECK(Level(kMaxRepresentableLevel).side() == 0x80000000u);

    CHECK_THROWS_AS(Level(-1), std::invalid_argument);
    CHECK_THROWS_AS(Level(32), std::invalid_argument);
}

TEST_CASE("generator sets keep canonical order") {
    const GeneratorSet at = GeneratorSet::make(Variant::arrowhead, Directedness::directed);
    REQUIRE(at.offsets.size() == 3);
    CHECK(at.offsets[0].dx == -1);
    CHECK(at.offsets[0].dy == -1);
    CHECK(at.offsets[1].dx == 1);
    CHECK(at.offsets[1].dy == 0);
    CHECK(at.offsets[2].dx == 0);
    CHECK(at.offsets[2].dy == 1);

    const GeneratorSet dt = GeneratorSet::make(Variant::diamond, Directedness::undirected);
    REQUIRE(dt.offsets.size() == 6);
    CHECK(dt.offsets[0].dx == 1);
    CHECK(dt.offsets[0].dy == 1);
    CHECK(dt.offsets[3].dx == -1);  // inverses follow in the same order
    CHECK(dt.offsets[3].dy == -1);
}

TEST_CASE("graph sizes and degrees") {
    const GraphSpec t1 = make_graph(1, Variant::arrowhead, Directedness::undirected);
    CHECK(t1.vertex_count() == 4);
    CHECK(t1.degree() == 6);
    CHECK(t1.arc_slots() == 24);  // 12 edge endpoints per side of each edge

    const GraphSpec dt2 = make_graph(2, Variant::diamond, Directedness::directed);
    CHECK(dt2.vertex_count() == 16);
    CHECK(dt2.degree() == 3);
    CHECK(dt2.arc_slots() == 48);

    const GraphSpec t0 = make_graph(0, Variant::arrowhead, Directedness::undirected);
    CHECK(t0.vertex_count() == 1);
    CHECK(t0.degree() == 6);
}

TEST_CASE("neighbors follow generator order with duplicates preserved") {
    const GraphSpec t2 = make_graph(2, Variant::arrowhead, Directedness::undirected);
    const std::vector<TorusVertex> expected_t2 = {{3, 3}, {1, 0}, {0, 1},
                                                  {1, 1}, {3, 0}, {0, 3}};
    CHECK(t2.neighbors({0, 0}) == expected_t2);

    const GraphSpec dt2 = make_graph(2, Variant::diamond, Directedness::directed);
    const std::vector<TorusVertex> expected_dt2 = {{1, 1}, {1, 0}, {0, 1}};
    CHECK(dt2.neighbors({0, 0}) == expected_dt2);

    // At n = 1 each generator equals its inverse, so slots repeat.
    const GraphSpec t1 = make_graph(1, Variant::arrowhead, Directedness::undirected);
    const std::vector<TorusVertex> expected_t1 = {{1, 1}, {1, 0}, {0, 1},
                                                  {1, 1}, {1, 0}, {0, 1}};
    CHECK(t1.neighbors({0, 0}) == expected_t1);

    // At n = 0 every slot is a loop.
    const GraphSpec t0 = make_graph(0, Variant::arrowhead, Directedness::undirected);
    const std::vector<TorusVertex> expected_t0(6, TorusVertex{0, 0});
    CHECK(t0.neighbors({0, 0}) == expected_t0);
}

TEST_CASE("neighbors wrap modular arithmetic") {
    const GraphSpec t3 = make_graph(3, Variant::arrowhead, Directedness::undirected);
    const std::vector<TorusVertex> expected = {{6, 6}, {0, 7}, {7, 0},
                                               {0, 0}, {6, 7}, {7, 6}};
    CHECK(t3.neighbors({7, 7}) == expected);
}

TEST_CASE("index round trip covers the torus") {
    const GraphSpec g = make_graph(3, Variant::diamond, Directedness::directed);
    for (std::uint64_t i = 0; i < g.vertex_count(); ++i) {
        CHECK(g.index(g.vertex_at(i)) == i);
    }
    CHECK(g.index({5, 3}) == 5 * 8 + 3);
}

TEST_CASE("resource ceiling guards graph construction") {
    CHECK_THROWS_AS(make_graph(13, Variant::arrowhead, Directedness::undirected),
                    ResourceLimitError);
    CHECK_THROWS_AS(make_graph(3, Variant::diamond, Directedness::directed, 2),
                    ResourceLimitError);
    CHECK_NOTHROW(make_graph(3, Variant::diamond, Directedness::directed, 3));
}

TEST_CASE("subgroup vertices enumerate scaled lattice") {
    const std::vector<TorusVertex> g21 = subgroup_vertices(2, 1);
    const std::vector<TorusVertex> expected = {{0, 0}, {0, 2}, {2, 0}, {2, 2}};
    CHECK(g21 == expected);

    CHECK(subgroup_vertices(2, 2) == std::vector<TorusVertex>{{0, 0}});
    CHECK(subgroup_vertices(3, 0).size() == 64);
    CHECK(subgroup_vertices(4, 2).size() == 16);

    CHECK_THROWS_AS(subgroup_vertices(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(subgroup_vertices(2, -1), std::invalid_argument);
}

TEST_CASE("subgroups are closed under scaled generator steps") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            const std::vector<TorusVertex> members = subgroup_vertices(n, k);
            const std::set<TorusVertex> lookup(members.begin(), members.end());
            const std::uint32_t side = std::uint32_t{1} << n;
            const std::uint32_t step = std::uint32_t{1} << k;
            const int deltas[6][2] = {{1, 1}, {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}};
            for (const TorusVertex& v : members) {
                for (const auto& d : deltas) {
                    const TorusVertex moved = {
                        (v.x + static_cast<std::uint32_t>(d[0]) * step) & (side - 1),
                        (v.y + static_cast<std::uint32_t>(d[1]) * step) & (side - 1)};
                    CHECK(lookup.count(moved) == 1);
                }
            }
        }
    }
}

TEST_CASE("embedding scales coordinates") {
    CHECK(embed_scaled(2, 1, {1, 1}) == TorusVertex{2, 2});
    CHECK(embed_scaled(5, 0, {7, 9}) == TorusVertex{7, 9});
    CHECK(embed_scaled(3, 2, {1, 0}) == TorusVertex{4, 0});
    CHECK(embed_scaled(3, 3, {0, 0}) == TorusVertex{0, 0});

    CHECK_THROWS_AS(embed_scaled(2, 1, {2, 0}), std::invalid_argument);  // not canonical
    CHECK_THROWS_AS(embed_scaled(2, 3, {0, 0}), std::invalid_argument);
}

TEST_CASE("embedding is an injective homomorphism onto the subgroup") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            const std::uint32_t guest_side = std::uint32_t{1} << (n - k);
            const std::uint32_t host_mask = (std::uint32_t{1} << n) - 1;
            std::set<TorusVertex> images;
            for (std::uint32_t x = 0; x < guest_side; ++x) {
                for (std::uint32_t y = 0; y < guest_side; ++y) {
                    images.insert(embed_scaled(n, k, {x, y}));
                }
            }
            // injective, and the image is exactly the subgroup
            const std::vector<TorusVertex> sub = subgroup_vertices(n, k);
            CHECK(images == std::set<TorusVertex>(sub.begin(), sub.end()));

            // additive: f(u + v) == f(u) + f(v) on a grid of pairs
            for (std::uint32_t a = 0; a < guest_side; ++a) {
                for (std::uint32_t b = 0; b < guest_side; ++b) {
                    const TorusVertex u = {a, (a * 3 + 1) & (guest_side - 1)};
                    const TorusVertex v = {(b * 5 + 2) & (guest_side - 1), b};
                    const TorusVertex sum = {(u.x + v.x) & (guest_side - 1),
                                             (u.y + v.y) & (guest_side - 1)};
                    const TorusVertex fu = embed_scaled(n, k, u);
                    const TorusVertex fv = embed_scaled(n, k, v);
                    const TorusVertex fsum = embed_scaled(n, k, sum);
                    CHECK(fsum == TorusVertex{(fu.x + fv.x) & host_mask,
                                              (fu.y + fv.y) & host_mask});
                }
            }
        }
    }
}

TEST_CASE("undirected variants induce the same neighbor multisets") {
    for (int n = 0; n <= 5; ++n) {
        const GraphSpec at = make_graph(n, Variant::arrowhead, Directedness::undirected);
        const GraphSpec dt = make_graph(n, Variant::diamond, Directedness::undirected);
        for (std::uint64_t i = 0; i < at.vertex_count(); ++i) {
            std::vector<TorusVertex> a = at.neighbors(at.vertex_at(i));
            std::vector<TorusVertex> d = dt.neighbors(dt.vertex_at(i));
            std::sort(a.begin(), a.end());
            std::sort(d.begin(), d.end());
            REQUIRE(a == d);
        }
    }
}
