#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "fixtures.hpp"
#include "lensgem/gem_io.hpp"

using namespace lensgem;

TEST_CASE("gem text format is exact") {
    CHECK(format_gem(fixture::s3_order2()) == "gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\n");
    CHECK(format_gem(fixture::s3_order2(), {{0, 1, 2}}) ==
          "gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\nlabel 0 1 2\n");
}

TEST_CASE("labelled gems round-trip") {
    for (auto [p, q] : {std::pair{2, 1}, {21, 8}, {17, 5}}) {
        const auto lc = fixture::lens(p, q);
        const auto text = format_gem(lc.graph, lc.labels);
        const auto back = parse_gem(text);
        CHECK(back.graph == lc.graph);
        CHECK(back.labels == lc.labels);
        CHECK(back.complete_crossing_count() == lc.crossing_count());
        CHECK(format_gem(back.graph, back.labels) == text);
    }
}

TEST_CASE("files round-trip") {
    const auto lc = fixture::lens(21, 8);
    const auto path = (std::filesystem::temp_directory_path() / "lensgem_io_test.gem").string();
    write_gem_file(path, lc.graph, lc.labels);
    const auto back = read_gem_file(path);
    CHECK(back == lc.gem());
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_gem_file(path), GemError);
}

TEST_CASE("parser tolerates blank lines and CRLF") {
    auto g = parse_gem("gem 2\r\n\r\nc0: 1 0\r\nc1: 1 0\nc2: 1 0\nc3: 1 0\n\n");
    CHECK(g.graph == fixture::s3_order2());
    CHECK(g.labels.empty());
    CHECK_FALSE(g.complete_crossing_count().has_value());
}

TEST_CASE("parser errors") {
    CHECK_THROWS_WITH_AS(parse_gem(""), doctest::Contains("missing header"), GemError);
    CHECK_THROWS_AS(parse_gem("gemm 2\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 0\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem x\n"), GemError);
    CHECK_THROWS_WITH_AS(parse_gem("gem 2\nc0: 1 0\nc1: 1 0\n"), doctest::Contains("four colour lines"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 0\nc2: 1 0\nc1: 1 0\nc3: 1 0\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1\nc1: 1 0\nc2: 1 0\nc3: 1 0\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 -1\nc1: 1 0\nc2: 1 0\nc3: 1 0\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 0x\nc1: 1 0\nc2: 1 0\nc3: 1 0\n"), GemError);
    CHECK_THROWS_WITH_AS(parse_gem("gem 3\nc0: 1 0 2\nc1: 1 0 2\nc2: 1 0 2\nc3: 1 0 2\n"),
                         doctest::Contains("odd order"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\nlabel 5 1 1\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\nlabel 0 1 5\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\nlabel 0 1\n"), GemError);
    CHECK_THROWS_AS(parse_gem("gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\nextra\n"), GemError);
}

TEST_CASE("labelled vertex lookup") {
    const auto gem = fixture::lens(8, 3).gem();
    CHECK(gem.vertex(2, 3) == LabelledCrystallization::vertex(2, 3));
    CHECK_THROWS_WITH_AS(static_cast<void>(gem.vertex(6, 1)), doctest::Contains("missing label"), GemError);
}

TEST_CASE("colour-swap symmetry") {
    CHECK(colour_swap_symmetry(fixture::lens(21, 8).gem()));
    CHECK(colour_swap_symmetry(fixture::lens(2, 1).gem()));

    // Rewire two 2-edges without touching their 3-coloured mirrors.
    const auto gem = fixture::lens(8, 3).gem();
    auto t = gem.graph.tables();
    const Vertex a = 0, b = t[2][a];
    Vertex c = 0;
    while (c == a || c == b || t[2][c] == a || t[2][c] == b) ++c;
    const Vertex d = t[2][c];
    t[2][a] = d;
    t[2][d] = a;
    t[2][c] = b;
    t[2][b] = c;
    LabelledGem broken{ColouredGraph::from_involutions(gem.graph.order(), t), gem.labels};
    CHECK_FALSE(colour_swap_symmetry(broken));

    LabelledGem unlabelled{gem.graph, {}};
    CHECK_THROWS_AS(colour_swap_symmetry(unlabelled), GemError);
}
