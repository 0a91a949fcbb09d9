#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diramsey/constructions.hpp"
#include "diramsey/embedding.hpp"
#include "diramsey/instances.hpp"
#include "diramsey/io.hpp"
#include "diramsey/oracle.hpp"
#include "diramsey/tree_catalog.hpp"

#include "naive_oracles.hpp"

#include <random>
#include <sstream>

using namespace diramsey;

namespace {

ColouredDigraph transitive_tournament(int n, int colour = 1, int colours = 1) {
    std::vector<ColouredDigraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, colour});
    return ColouredDigraph(n, HostKind::Tournament, colours, edges);
}

ColouredDigraph cyclic_triangle(int colour = 1) {
    return ColouredDigraph(3, HostKind::Tournament, 1,
                           {{0, 1, colour}, {1, 2, colour}, {2, 0, colour}});
}

} // namespace

TEST_CASE("tree type enforces its invariants") {
    CHECK_NOTHROW(OrientedTree(1, {}));
    CHECK_NOTHROW(OrientedTree(3, {{0, 1}, {2, 1}}, 0));
    CHECK_THROWS_AS(OrientedTree(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(OrientedTree(3, {{0, 1}}), std::invalid_argument);         // too few edges
    CHECK_THROWS_AS(OrientedTree(2, {{0, 0}}), std::invalid_argument);         // loop
    CHECK_THROWS_AS(OrientedTree(3, {{0, 1}, {1, 0}}), std::invalid_argument); // bidirected
    CHECK_THROWS_AS(OrientedTree(4, {{0, 1}, {1, 0}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(OrientedTree(3, {{0, 1}, {1, 2}}, 5), std::invalid_argument); // bad root
}

TEST_CASE("host validation reports the first violation") {
    // minimal tournament
    ColouredDigraph ok(2, HostKind::Tournament, 1, {{0, 1, 1}});
    CHECK(!ok.validate());

    // bidirected pair in a claimed tournament
    ColouredDigraph bad(2, HostKind::Tournament, 1, {{0, 1, 1}, {1, 0, 1}});
    auto v = bad.validate();
    REQUIRE(v.has_value());
    CHECK(v->find("bidirected") != std::string::npos);

    // complete digraph missing edge (2,0)
    std::vector<ColouredDigraph::Edge> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !(i == 2 && j == 0)) edges.push_back({i, j, 1});
    ColouredDigraph incomplete(3, HostKind::CompleteDigraph, 1, edges);
    auto m = incomplete.validate();
    REQUIRE(m.has_value());
    CHECK(m->find("missing reverse edge") != std::string::npos);
}

TEST_CASE("containment oracle on the stated examples") {
    // 3-cycle, all colour 1 vs out-star on 3: every out-degree is 1
    CHECK(!contains_monochromatic_copy(cyclic_triangle(), 1, out_star(3)));

    // transitive tournament on 3 vs directed P3
    auto emb = contains_monochromatic_copy(transitive_tournament(3), 1, directed_path(3));
    REQUIRE(emb.has_value());
    CHECK(!check_embedding(transitive_tournament(3), directed_path(3), *emb));

    // lexicographic colouring (k=2, l=2, n=3): no colour-1 directed path of length 2
    LexiConstruction lex = build_lexicographic(3, 2, 2);
    CHECK(!contains_monochromatic_copy(lex.host, 1, directed_path(3)));

    // a tree larger than its host is impossible, not an error
    CHECK(!contains_monochromatic_copy(transitive_tournament(2), 1, directed_path(5)));
}

TEST_CASE("longest monochromatic directed path") {
    // empty colour class: a single vertex
    ColouredDigraph empty(4, HostKind::General, 1, {});
    CHECK(longest_monochromatic_directed_path(empty, 1).size() == 1);

    // transitive tournament on 4: length 3
    auto p = longest_monochromatic_directed_path(transitive_tournament(4), 1);
    CHECK(p.size() == 4);

    // layered construction (k=3, n=2, blown-up, 16 vertices): length <= 3 in each colour
    LayeredConstruction lay = build_layered(2, 3, LayeredStage::BlownUp);
    REQUIRE(lay.host.order() == 16);
    for (int c = 1; c <= 3; ++c) {
        auto q = longest_monochromatic_directed_path(lay.host, c);
        CHECK(static_cast<int>(q.size()) - 1 <= 3);
    }
}

TEST_CASE("oracle agrees with the unpruned reference enumeration") {
    std::mt19937 rng(7);
    int agreements = 0;
    for (int round = 0; round < 400; ++round) {
        int n = 2 + static_cast<int>(rng() % 6); // hosts up to 7
        int k = 1 + static_cast<int>(rng() % 2);
        ColouredDigraph host = round % 3 == 0   ? random_tournament(n, k, rng)
                               : round % 3 == 1 ? random_complete_digraph(n, k, rng)
                                                : random_digraph(n, 0.4, rng);
        if (round % 3 == 2) k = 1;
        OrientedTree tree = random_tree(1 + static_cast<int>(rng() % std::min(n, 5)), rng);
        for (int c = 1; c <= k; ++c) {
            auto fast = contains_monochromatic_copy(host, c, tree);
            bool slow = testing::naive_contains(host, c, tree);
            REQUIRE(fast.has_value() == slow);
            if (fast) REQUIRE(!check_embedding(host, tree, *fast));
            ++agreements;
        }
    }
    CHECK(agreements > 400);
}

TEST_CASE("longest path length characterised by path containment") {
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 6);
        ColouredDigraph host = random_digraph(n, 0.2 + 0.6 * (rng() % 10) / 10.0, rng);
        auto path = longest_monochromatic_directed_path(host, 1);
        int len = static_cast<int>(path.size()) - 1;
        CHECK(len == testing::naive_longest_path_length(host, 1));
        CHECK(contains_monochromatic_copy(host, 1, directed_path(len + 1)).has_value());
        if (len + 2 <= n)
            CHECK(!contains_monochromatic_copy(host, 1, directed_path(len + 2)).has_value());
        // the returned path is itself a valid certificate
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(host.colour_of(path[i], path[i + 1]) == 1);
    }
}

TEST_CASE("tree file format round-trips and rejects violations with line numbers") {
    OrientedTree t(4, {{0, 1}, {2, 1}, {1, 3}}, 2);
    std::ostringstream os;
    write_tree(os, t);
    std::istringstream is(os.str());
    OrientedTree back = parse_tree(is);
    CHECK(back.order() == 4);
    CHECK(back.root() == 2);
    CHECK(canonical_tree_code(back) == canonical_tree_code(t));

    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_tree(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("x 3\n0 1\n1 2\n", 1);
    expect_error("t 3\n0 1\n1 1\n", 3);       // loop
    expect_error("t 3\n0 1\n0 1\n", 3);       // duplicate
    expect_error("t 3\n0 1\n1 5\n", 3);       // out of range
    expect_error("t 3 7\n0 1\n1 2\n", 1);     // root out of range
}

TEST_CASE("colouring file format round-trips and rejects violations") {
    LexiConstruction lex = build_lexicographic(2, 2, 2);
    std::ostringstream os;
    write_colouring(os, lex.host);
    std::istringstream is(os.str());
    ColouredDigraph back = parse_colouring(is);
    CHECK(back.order() == lex.host.order());
    CHECK(back.colours() == 2);
    CHECK(!back.validate());
    for (int u = 0; u < back.order(); ++u)
        for (int v = 0; v < back.order(); ++v)
            CHECK(back.colour_of(u, v) == lex.host.colour_of(u, v));

    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_colouring(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("", 1);
    expect_error("c 2 1 Q\n0 1 1\n", 1);
    expect_error("c 2 1 T\n0 1 3\n", 2);            // colour out of range
    expect_error("c 2 1 T\n0 1 1\n1 0 1\n", 3);     // bidirected in tournament
    expect_error("c 3 1 T\n0 1 1\n", 1);            // missing edges (header claim)
    expect_error("c 2 1 D\n0 1 1\n0 1 1\n", 3);     // duplicate ordered edge
}

TEST_CASE("embedding certificates re-validate") {
    ColouredDigraph host = transitive_tournament(4);
    OrientedTree p3 = directed_path(3);
    Embedding good{{0, 1, 2}, 1};
    CHECK(!check_embedding(host, p3, good));
    Embedding repeat{{0, 0, 2}, 1};
    CHECK(check_embedding(host, p3, repeat).has_value());
    Embedding backwards{{2, 1, 0}, 1};
    CHECK(check_embedding(host, p3, backwards).has_value());
}
