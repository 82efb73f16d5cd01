#include <doctest.h>

#include "fixtures.hpp"
#include "lensgem/invariants.hpp"
#include "lensgem/survey.hpp"

using namespace lensgem;

TEST_CASE("residues of the order-2 gem") {
    auto r = residues(fixture::s3_order2());
    for (int k = 0; k < 6; ++k) CHECK(r.pair_counts[k] == 1);
    for (int c = 0; c < 4; ++c) CHECK(r.g_hat(c) == 1);
}

TEST_CASE("residues of the (21,8) crystallization") {
    auto r = residues(fixture::lens(21, 8).graph);
    CHECK(r.g(0, 1) == 7);
    for (const auto& c : r.cycles[ColourPair{0, 1}.index()]) CHECK(c.length() == 4);
}

TEST_CASE("K4 residue example") {
    const auto g = fixture::k4_residue();
    auto r = residues(g);
    CHECK(r.g(1, 2) == 1);
    CHECK(r.g(1, 3) == 1);
    CHECK(r.g(2, 3) == 1);
    auto cls = classify(g);
    CHECK(cls.connected);
    CHECK_FALSE(cls.bipartite);
    CHECK_FALSE(bipartition(g).has_value());
    CHECK_FALSE(represents_closed_3manifold(g));
    CHECK_FALSE(is_crystallization(g));
}

TEST_CASE("order-2 gem is a connected bipartite contracted manifold gem") {
    const auto g = fixture::s3_order2();
    auto cls = classify(g);
    CHECK(cls.connected);
    CHECK(cls.bipartite);
    CHECK(cls.contracted);
    CHECK(represents_closed_3manifold(g));
    CHECK(regular_genus(g) == 0);
    for (auto part : all_partitions()) {
        auto s = embedding_surface(g, part);
        CHECK(s.faces.size() == 4);
        CHECK(s.euler_characteristic == 2);
        CHECK(s.genus == 0);
        CHECK(s.orientable);
    }
}

TEST_CASE("residue and embedding identities on constructed crystallizations") {
    for (const auto& lp : lens_range(40)) {
        CAPTURE(lp.p);
        CAPTURE(lp.q);
        const auto g = ferri_crystallization(lp).graph;
        const int n = static_cast<int>(g.order());
        auto r = residues(g);
        for (auto pair : {ColourPair{0, 1}, ColourPair{0, 2}, ColourPair{0, 3}}) {
            CHECK(r.g(pair.a, pair.b) == r.pair_counts[pair.complement().index()]);
        }
        CHECK(r.g(0, 1) + r.g(0, 2) + r.g(0, 3) == n / 2 + 2);
        auto cls = classify(g);
        CHECK(cls.bipartite);
        CHECK(cls.contracted);
        CHECK(represents_closed_3manifold(g));
        for (auto part : all_partitions()) {
            auto s = embedding_surface(g, part);
            int faces = 0;
            for (auto fam : part.face_families()) faces += r.pair_counts[fam.index()];
            CHECK(static_cast<int>(s.faces.size()) == faces);
            CHECK(s.euler_characteristic == faces - n);
            CHECK(s.orientable);
            CHECK(s.genus == r.g(part.first.a, part.first.b) - 1);
            CHECK(1 - s.euler_characteristic / 2 == s.genus);
        }
    }
}

TEST_CASE("(21,8) partition {02|13}: two genus formulas agree") {
    const auto g = fixture::lens(21, 8).graph;
    auto r = residues(g);
    auto s = embedding_surface(g, PartitionPair{ColourPair{0, 2}});
    const int f = r.g(0, 1) + r.g(0, 3) + r.g(1, 2) + r.g(2, 3);
    CHECK(s.euler_characteristic == f - 28);
    CHECK(s.genus == r.g(0, 2) - 1);
}

TEST_CASE("regular genus of L(p,1) crystallizations is one") {
    for (int p = 2; p <= 10; ++p) {
        CAPTURE(p);
        CHECK(regular_genus(fixture::lens(p, 1).graph) == 1);
    }
    CHECK(fixture::lens(5, 1).graph.order() == 20);
}

TEST_CASE("non-orientable embedding reports crosscaps") {
    const auto g = fixture::k4_residue();
    auto s = embedding_surface(g, PartitionPair{ColourPair{0, 1}});
    CHECK_FALSE(s.orientable);
    CHECK(s.genus == 2 - s.euler_characteristic);
}

TEST_CASE("embedding surface rejects disconnected graphs") {
    ColouredGraph::Tables t;
    for (auto& row : t) row = {1, 0, 3, 2};
    auto g = ColouredGraph::from_involutions(4, t);
    CHECK_THROWS_AS(embedding_surface(g, all_partitions()[0]), GemError);
    CHECK_FALSE(represents_closed_3manifold(g));
    CHECK_FALSE(classify(g).contracted);
}
