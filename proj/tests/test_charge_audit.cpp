#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/charge_audit.hpp"
#include "recolor/instances.hpp"

using namespace recolor;

TEST_CASE("balanced charges") {
    SUBCASE("K3: vertices 3x(-2), faces 2x(-1), total -8") {
        auto g = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
        auto led = balanced_charges(g);
        for (int v = 0; v < 3; ++v) CHECK(led.vertex_sixths[v] == -12);
        for (int f = 0; f < 2; ++f) CHECK(led.face_sixths[f] == -6);
        CHECK(led.total() == -48);
    }
    SUBCASE("star K1,3: one 6-face of charge +2") {
        auto g = PlaneGraph::build({{1, 2, 3}, {0}, {0}, {0}});
        auto led = balanced_charges(g);
        CHECK(led.vertex_sixths[0] == -6);
        CHECK(led.vertex_sixths[1] == -18);
        CHECK(led.face_sixths[0] == 12);
        CHECK(led.total() == -48);
    }
    SUBCASE("K4: total -8") {
        auto g = PlaneGraph::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
        auto led = balanced_charges(g);
        for (int v = 0; v < 4; ++v) CHECK(led.vertex_sixths[v] == -6);
        CHECK(led.total() == -48);
    }
    SUBCASE("random plane graphs always total -8") {
        for (uint64_t seed = 0; seed < 30; ++seed) {
            auto g = random_planar(25, seed, static_cast<int>(seed % 6));
            CHECK(balanced_charges(g).total() == -48);
        }
    }
}

TEST_CASE("diamond stats") {
    SUBCASE("icosahedron: w_t = 5, w_d = 0 everywhere") {
        auto g = icosahedron();
        auto st = diamond_stats(g);
        for (Vertex v = 0; v < g.universe(); ++v) {
            CHECK(st.w_t[v] == 5);
            CHECK(st.w_d[v] == 0);
        }
    }
    SUBCASE("cube: w = 0 everywhere") {
        auto g = cube();
        auto st = diamond_stats(g);
        for (Vertex v = 0; v < g.universe(); ++v) CHECK(st.w(v) == 0);
    }
    SUBCASE("lone diamond: mid-edge endpoints see one special diamond") {
        // two triangles on mid-edge 0-1 with wings 2, 3; outer face length 4
        auto g = stacked_diamond_chain(1);
        auto st = diamond_stats(g);
        // spine vertices 0,1 carry the mid-edge; both flanking outer edges
        // lie on the 4-face, so the diamond is special at both
        int specials = 0;
        for (Vertex v = 0; v < g.universe(); ++v) specials += st.w_d[v];
        CHECK(st.w_d[0] == 1);
        CHECK(st.w_d[1] == 1);
        CHECK(specials == 2);
        CHECK(st.w_t[0] == 2);
        CHECK(st.w_t[2] == 1);
    }
    SUBCASE("w bound for 7+ vertices on dense random triangulations") {
        for (uint64_t seed = 0; seed < 40; ++seed) {
            auto g = random_planar(30, seed, 0);
            auto st = diamond_stats(g);
            for (Vertex v = 0; v < g.universe(); ++v)
                if (g.present(v) && g.degree(v) >= 7)
                    CHECK(st.w(v) <= 3 * (g.degree(v) - 4));
        }
    }
}

TEST_CASE("discharge conservation on every plan and input") {
    std::vector<PlaneGraph> gs;
    gs.push_back(cube());
    gs.push_back(icosahedron());
    gs.push_back(stacked_diamond_chain(2));
    gs.push_back(random_planar(18, 5, 3));
    gs.push_back(delta_floored_instance(Strategy::g1, 0));
    for (const auto& g : gs)
        for (auto plan : {DischargePlan::T1, DischargePlan::T2, DischargePlan::T4}) {
            auto rep = run_discharge(g, plan);
            CHECK(rep.final_ledger.total() == -48);
        }
}

TEST_CASE("T4 on the cube: deficits are the eight 3-vertices, all explained") {
    auto g = cube();
    auto rep = run_discharge(g, DischargePlan::T4);
    CHECK(rep.final_ledger.total() == -48);
    CHECK(rep.deficits.size() == 8);  // every vertex keeps charge -1
    // all of them accounted for by a reduction (H4: the cube is 3-regular)
    CHECK(rep.negative_elements.empty());
    REQUIRE(rep.explained_by.has_value());
    CHECK(rep.explained_by->kind == ConfigKind::H4);
    CHECK(rep.hypothesis_ok);  // cube is in G-cal with min degree 3
}

TEST_CASE("T1 on the g1 audit instance: negatives explained by a diamond") {
    auto g = delta_floored_instance(Strategy::g1, 0);
    auto rep = run_discharge(g, DischargePlan::T1);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.final_ledger.total() == -48);
    CHECK(rep.negative_elements.empty());
    REQUIRE(rep.explained_by.has_value());
    CHECK(rep.explained_by->kind == ConfigKind::DiamondH);
}

TEST_CASE("T2 on the g2 audit instance") {
    auto g = delta_floored_instance(Strategy::g2, 0);
    auto rep = run_discharge(g, DischargePlan::T2);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.negative_elements.empty());
    REQUIRE(rep.explained_by.has_value());
}

TEST_CASE("out-of-hypothesis runs are flagged, not rejected") {
    auto rep = run_discharge(icosahedron(), DischargePlan::T1);  // not in G1
    CHECK_FALSE(rep.hypothesis_ok);
    CHECK(rep.final_ledger.total() == -48);
}

TEST_CASE("T4 long-distance transfers carry their routes") {
    // hexagon with boundary degrees (5,4,4,4,4,3); the 5-vertex's unit routes
    // through the 4-vertices to the 3-vertex along the hexagonal walk
    auto g = PlaneGraph::build({{5, 11, 12, 6, 1},
                                {0, 6, 7, 2},
                                {3, 1, 7, 8},
                                {9, 4, 2, 8},
                                {9, 10, 5, 3},
                                {11, 0, 4},
                                {1, 0, 12, 11, 7},
                                {8, 2, 1, 6},
                                {9, 3, 2, 7},
                                {10, 4, 3, 8},
                                {11, 4, 9},
                                {10, 6, 12, 0, 5},
                                {11, 6, 0}});
    auto rep = run_discharge(g, DischargePlan::T4);
    CHECK(rep.final_ledger.total() == -48);
    bool saw_hex_route = false;
    for (const auto& t : rep.transfers)
        if (t.rule == "R1c") {
            CHECK(t.route.size() >= 3);
            CHECK(t.route.front() == t.from.id);
            CHECK(t.route.back() == t.to.id);
            if (t.route == std::vector<Vertex>{0, 1, 2, 3, 4, 5}) saw_hex_route = true;
        }
    CHECK(saw_hex_route);
}
