#include <catch2/catch_amalgamated.hpp>

#include "util.hpp"

using namespace kpg;
using kpgtest::load_kgraph;
using kpgtest::path_of;

TEST_CASE("degree arithmetic") {
    Degree a{2, 0}, b{1, 3};
    CHECK(a + b == Degree{3, 3});
    CHECK(a.join(b) == Degree{2, 3});
    CHECK(a.leq(a.join(b)));
    CHECK(b.leq(a.join(b)));
    CHECK(Degree::unit(2, 2) == Degree{0, 1});
    CHECK((a + b) - b == a);
}

TEST_CASE("validation accepts the fixture bases") {
    for (const char* name : {"lambda_1loop.json", "lambda_2loops.json", "lambda_3loops.json",
                             "lambda_ef.json", "lambda_4loops.json"}) {
        KGraph g = load_kgraph(name);
        ValidationReport r = validate_kgraph(g);
        INFO(name);
        CHECK(r.ok());
    }
}

TEST_CASE("validation rejects malformed graphs") {
    KGraph g = load_kgraph("lambda_ef.json");

    SECTION("empty graph") {
        KGraph e;
        e.k = 1;
        e.finalize();
        CHECK(validate_kgraph(e).has("Empty"));
    }
    SECTION("missing square") {
        g.squares.clear();
        g.finalize();
        CHECK(validate_kgraph(g).has("MissingSquare"));
    }
    SECTION("duplicate square") {
        g.squares.push_back(g.squares[0]);
        g.finalize();
        CHECK(validate_kgraph(g).has("DuplicateSquare"));
    }
    SECTION("source vertex") {
        KGraph h = load_kgraph("lambda_1loop.json");
        h.vertices.push_back("w");  // no in/out edges at all
        h.finalize();
        ValidationReport r = validate_kgraph(h);
        CHECK(r.has("SourceVertex"));
        CHECK(r.has("Disconnected"));
    }
    SECTION("bad color") {
        KGraph h = load_kgraph("lambda_1loop.json");
        h.edges[0].color = 3;
        h.finalize();
        CHECK(validate_kgraph(h).has("BadColor"));
    }
}

TEST_CASE("hexagon condition for k = 3") {
    // one vertex, three loops of distinct colors, all squares commuting
    KGraph g;
    g.k = 3;
    g.vertices = {"v"};
    g.edges = {{"a", 1, 0, 0}, {"b", 2, 0, 0}, {"c", 3, 0, 0}};
    g.squares = {{{0, 1}, {1, 0}}, {{0, 2}, {2, 0}}, {{1, 2}, {2, 1}}};
    g.finalize();
    CHECK(validate_kgraph(g).ok());
}

TEST_CASE("normal form sorts colors via squares") {
    KGraph g = load_kgraph("lambda_ef.json");
    int e = g.edge_index.at("e"), f = g.edge_index.at("f");
    PathNF p = normalize_path(g, 0, {f, e});  // f applied first
    CHECK(p.edges == std::vector<int>{e, f});
    CHECK(normalize_path(g, 0, p.edges).edges == p.edges);  // idempotent
    CHECK(path_degree(g, p) == Degree{1, 1});
}

TEST_CASE("normal form is constant on square-move orbits") {
    KGraph g = load_kgraph("lambda_4loops.json");
    // all degree-(2,2) paths from x: every interleaving of a fixed word's
    // orbit must normalize identically
    for (const PathNF& p : paths_from(g, 0, Degree{2, 2})) {
        std::vector<int> w = p.edges;
        // apply every admissible single square swap and renormalize
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            std::vector<int> sw = w;
            if (g.edges[static_cast<size_t>(sw[i])].color ==
                g.edges[static_cast<size_t>(sw[i + 1])].color)
                continue;
            auto it = g.square_of.find({sw[i], sw[i + 1]});
            if (it == g.square_of.end()) continue;
            sw[i] = it->second.first;
            sw[i + 1] = it->second.second;
            CHECK(normalize_path(g, 0, sw).edges == p.edges);
        }
    }
}

TEST_CASE("compose basics") {
    KGraph g = load_kgraph("lambda_ef.json");
    PathNF pe = path_of(g, 0, {"e"}), pf = path_of(g, 0, {"f"});
    PathNF ef = compose(g, pe, pf);  // e after f
    CHECK(path_degree(g, ef) == Degree{1, 1});
    PathNF idv = identity_path(0);
    CHECK(compose(g, pe, idv).edges == pe.edges);
    CHECK(compose(g, idv, pe).edges == pe.edges);
}

TEST_CASE("compose rejects mismatched endpoints") {
    KGraph g = load_kgraph("lambda_1loop.json");
    KGraph h;  // two vertices, one edge u -> w, plus loops to stay valid
    h.k = 1;
    h.vertices = {"u", "w"};
    h.edges = {{"x", 1, 0, 1}, {"lu", 1, 0, 0}, {"lw", 1, 1, 1}};
    h.finalize();
    PathNF px = edge_path(h, 0);
    CHECK_THROWS_AS(compose(h, px, px), error);  // r(x) = w but s(x) = u
}

TEST_CASE("factorize inverts compose") {
    KGraph g = load_kgraph("lambda_4loops.json");
    for (const PathNF& p : paths_from(g, 0, Degree{1, 2})) {
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 2; ++j) {
                Degree m{i, j};
                auto [mu, nu] = factorize(g, p, m);
                CHECK(path_degree(g, nu) == m);
                CHECK(path_degree(g, mu) == path_degree(g, p) - m);
                CHECK(compose(g, mu, nu).edges == p.edges);
            }
    }
    PathNF p = path_of(g, 0, {"e1", "f1"});
    CHECK_THROWS_AS(factorize(g, p, Degree{2, 0}), error);
    auto [mu0, nu0] = factorize(g, p, Degree{0, 0});
    CHECK(nu0.edges.empty());
    CHECK(mu0.edges == p.edges);
}

TEST_CASE("associativity on composable edge triples") {
    KGraph g = load_kgraph("lambda_4loops.json");
    for (size_t a = 0; a < g.edges.size(); ++a)
        for (size_t b = 0; b < g.edges.size(); ++b)
            for (size_t c = 0; c < g.edges.size(); ++c) {
                PathNF pa = edge_path(g, static_cast<int>(a));
                PathNF pb = edge_path(g, static_cast<int>(b));
                PathNF pc = edge_path(g, static_cast<int>(c));
                PathNF left = compose(g, compose(g, pa, pb), pc);
                PathNF right = compose(g, pa, compose(g, pb, pc));
                CHECK(left.edges == right.edges);
            }
}

TEST_CASE("path enumeration is consistent with factorization") {
    KGraph g = load_kgraph("lambda_4loops.json");
    auto all = paths_from(g, 0, Degree{1, 1});
    CHECK(all.size() == 4);  // e_i then f_j choices collapse to 4 squares
    for (const PathNF& p : all) {
        auto [mu, nu] = factorize(g, p, Degree{1, 0});
        bool found = false;
        for (const PathNF& q : paths_from(g, 0, Degree{1, 0}))
            if (q.edges == nu.edges) found = true;
        CHECK(found);
    }
    CHECK(paths_into(g, 0, Degree{1, 1}).size() == 4);
}

TEST_CASE("minimal common extensions") {
    KGraph g = load_kgraph("lambda_ef.json");
    PathNF pe = path_of(g, 0, {"e"}), pf = path_of(g, 0, {"f"});
    auto mce = minimal_common_extensions(g, pe, pf);
    REQUIRE(mce.size() == 1);  // unique square: e.alpha = f.beta
    CHECK(compose(g, pe, mce[0].first).edges == compose(g, pf, mce[0].second).edges);

    auto sym = minimal_common_extensions(g, pf, pe);
    REQUIRE(sym.size() == 1);
    CHECK(sym[0].first.edges == mce[0].second.edges);
    CHECK(sym[0].second.edges == mce[0].first.edges);

    // same-color distinct edges never extend
    KGraph h = load_kgraph("lambda_2loops.json");
    auto none = minimal_common_extensions(h, path_of(h, 0, {"a"}), path_of(h, 0, {"b"}));
    CHECK(none.empty());
}

TEST_CASE("degree example from the two-color one-vertex base") {
    KGraph g = load_kgraph("lambda_ef.json");
    PathNF p = compose(g, path_of(g, 0, {"e"}), path_of(g, 0, {"f"}));
    CHECK(path_degree(g, p) == Degree{1, 1});
}
