#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adm/invariants.hpp"
#include "adm/planegraph.hpp"

using namespace adm;

TEST_CASE("plane graph stats for the gallery") {
    auto st = [](const PlaneGraph& g) {
        validate_plane_graph(g);
        return plane_graph_stats(g);
    };
    EmbeddedStats p2 = st(make_path(2));
    CHECK(p2.k == 1);
    CHECK(p2.faces == 1);
    CHECK(p2.total_genus == 0);

    CHECK(st(make_cycle(3)).faces == 2);
    CHECK(st(make_theta()).faces == 3);
    CHECK(st(make_bouquet(3)).faces == 4);
    EmbeddedStats k4 = st(make_k4());
    CHECK(k4.faces == 4);
    CHECK(k4.total_genus == 0);
}

TEST_CASE("Tutte polynomial by deletion and contraction") {
    CHECK(tutte_plane(make_path(4)).render() == "x^3");
    CHECK(tutte_plane(make_cycle(3)).render() == "x^2 + x + y");
    CHECK(tutte_plane(make_bouquet(2)).render() == "y^2");
    CHECK(tutte_plane(make_theta()).render() == "y^2 + x + y");
    CHECK(tutte_plane(make_k4()) ==
          BiPoly::parse("x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3"));
}

TEST_CASE("alt_c doubles edges and pairs them into clockwise digons") {
    auto d = alt_c(make_cycle(3));
    DimapStats s = stats(d);
    CHECK(s.edge_count == 6);
    CHECK(s.is == 3);
    CHECK(s.cf == 3);  // one clockwise digon per undirected edge
    CHECK(s.af == 2);  // anticlockwise faces mirror the plane faces
    auto [cw, acw] = faces(d);
    for (auto& f : cw) CHECK(f.boundary.size() == 2);

    auto a = alt_a(make_cycle(3));
    DimapStats sa = stats(a);
    CHECK(sa.af == 3);
    CHECK(sa.cf == 2);
    auto [cw2, acw2] = faces(a);
    for (auto& f : acw2) CHECK(f.boundary.size() == 2);
}

TEST_CASE("Tutte transfers to the c- and a-invariants") {
    std::vector<PlaneGraph> gallery = {make_path(2), make_path(3), make_cycle(2),
                                       make_cycle(3), make_bouquet(1), make_bouquet(2),
                                       make_theta()};
    for (auto& g : gallery) {
        BiPoly t = tutte_plane(g);
        CHECK(ctutte(alt_c(g)) == t);
        CHECK(atutte(alt_a(g)) == t);
    }
}

TEST_CASE("enumeration of connected plane multigraphs") {
    CHECK(enumerate_plane_graphs(0).size() == 1);

    // one edge: either a link or a loop
    auto m1 = enumerate_plane_graphs(1);
    CHECK(m1.size() == 2);

    // two edges: path, 2-cycle, loop with a pendant edge, nested loops
    auto m2 = enumerate_plane_graphs(2);
    CHECK(m2.size() == 4);
    std::multiset<std::string> polys;
    for (auto& g : m2) {
        validate_plane_graph(g);
        CHECK(plane_graph_stats(g).total_genus == 0);
        polys.insert(tutte_plane(g).render());
    }
    CHECK(polys == std::multiset<std::string>{"x^2", "x + y", "x*y", "y^2"});

    for (auto& g : enumerate_plane_graphs(3)) {
        validate_plane_graph(g);
        CHECK(plane_graph_stats(g).k == 1);
        CHECK(plane_graph_stats(g).total_genus == 0);
    }
}
