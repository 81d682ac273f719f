#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adm/reduce.hpp"
#include "adm/triality.hpp"
#include "fixtures.hpp"

using namespace adm;

TEST_CASE("edge classification on small dimaps") {
    auto u = fix::ultraloop();
    EdgeClass cu = classify_edge(u, "e1");
    CHECK(cu.kind == EdgeClass::Ultraloop);
    CHECK(cu.is1Loop);
    CHECK(cu.isOmegaLoop);
    CHECK(cu.isOmega2Loop);

    // every edge of a standalone directed 3-cycle is a proper 1-loop
    auto c3 = fix::c3();
    for (auto& e : c3.edge_ids()) {
        EdgeClass c = classify_edge(c3, e);
        CHECK(c.kind == EdgeClass::Proper1Loop);
        CHECK_FALSE(c.isOmegaLoop);
        CHECK_FALSE(c.isOmega2Loop);
    }

    // digon edges are 1-loops (both heads have degree two)
    auto d = fix::digon();
    for (auto& e : d.edge_ids()) CHECK(classify_edge(d, e).kind == EdgeClass::Proper1Loop);

    // two loops at one vertex, sigma_omega identity: each is a proper omega-loop
    auto a = fix::two_loop_a();
    for (auto& e : a.edge_ids()) {
        EdgeClass c = classify_edge(a, e);
        CHECK(c.kind == EdgeClass::ProperOmegaLoop);
        CHECK(c.is1Semiloop);  // still a standard loop flag-wise
    }
}

TEST_CASE("loop flags never come in pairs") {
    for (auto& dm : {fix::ultraloop(), fix::digon(), fix::c3(), fix::torus3(),
                     fix::two_loop_a(), fix::two_loop_b(), fix::cycle(4)}) {
        for (auto& e : dm.edge_ids()) {
            EdgeClass c = classify_edge(dm, e, true);
            int loops = int(c.is1Loop) + int(c.isOmegaLoop) + int(c.isOmega2Loop);
            CHECK(loops != 2);
        }
    }
}

TEST_CASE("torus triple is a multi-semiloop example") {
    auto t = fix::torus3();
    CHECK_THROWS_AS(classify_edge(t, "e1"), PreconditionError);
    EdgeClass c = classify_edge(t, "e1", true);
    CHECK(c.is1Semiloop);
    CHECK(c.isOmegaSemiloop);
    CHECK(c.isOmega2Semiloop);
    CHECK(c.kind == EdgeClass::Proper1Semiloop);  // precedence 1 > omega > omega2
}

TEST_CASE("delete_pair measures cutsets and genus drops") {
    auto d = fix::digon();
    EmbeddedStats before = embedded_stats(d.graph());
    EmbeddedDigraph g = delete_pair(d, "e1", d.sigma_omega("e1"));
    EmbeddedStats after = embedded_stats(g);
    CHECK(before.k == 1);
    CHECK(after.k == 2);  // two isolated vertices remain

    auto t = fix::torus3();
    EmbeddedStats tb = embedded_stats(t.graph());
    CHECK(tb.total_genus == 1);
    EmbeddedStats ta = embedded_stats(delete_pair(t, "e1", t.sigma_omega("e1")));
    CHECK(ta.total_genus == 0);

    auto c4 = fix::cycle(4);
    EmbeddedStats ca = embedded_stats(delete_pair(c4, "e1", c4.sigma_omega2("e1")));
    CHECK(ca.k == 2);

    CHECK_THROWS_AS(delete_pair(c4, "e1", "e3"), PreconditionError);
}

TEST_CASE("reductions on the smallest dimaps") {
    // ultraloop: any reduction deletes, leaving the empty dimap
    CHECK(reduce(fix::ultraloop(), "e1", ReductionKind::Star).empty());
    CHECK(reduce(fix::ultraloop(), "e1", ReductionKind::One).empty());

    // contracting one digon edge turns the partner into an ultraloop
    auto d1 = reduce(fix::digon(), "e1", ReductionKind::One);
    CHECK(is_isomorphic(d1, fix::ultraloop()));

    // omega-reduction of a 3-cycle edge gives the digon
    auto r = reduce(fix::c3(), "e1", ReductionKind::Omega);
    CHECK(r.edge_count() == 2);
    DimapStats s = stats(r);
    CHECK(s.af == 1);
    CHECK(s.cf == 1);
    CHECK(is_isomorphic(r, fix::digon()));

    // omega2-reduction likewise shrinks the cycle
    auto r2 = reduce(fix::cycle(4), "e1", ReductionKind::Omega2);
    CHECK(is_isomorphic(r2, fix::c3()));
}

TEST_CASE("triloop reductions agree for every kind") {
    for (auto& dm : {fix::ultraloop(), fix::digon(), fix::c3(), fix::two_loop_a(),
                     fix::two_loop_b()}) {
        for (auto& e : dm.edge_ids()) {
            EdgeClass c = classify_edge(dm, e, true);
            if (!c.is_triloop()) continue;
            auto r1 = reduce(dm, e, ReductionKind::One);
            auto rw = reduce(dm, e, ReductionKind::Omega);
            auto rw2 = reduce(dm, e, ReductionKind::Omega2);
            CHECK(is_isomorphic(r1, rw));
            CHECK(is_isomorphic(r1, rw2));
            CHECK(is_isomorphic(r1, reduce(dm, e, ReductionKind::Star)));
        }
    }
    CHECK_THROWS_AS(reduce(fix::torus3(), "e1", ReductionKind::Star), PreconditionError);
}

TEST_CASE("reduction closure and counting deltas") {
    using RK = ReductionKind;
    for (auto& dm : {fix::digon(), fix::c3(), fix::torus3(), fix::two_loop_a(),
                     fix::two_loop_b(), fix::cycle(4)}) {
        DimapStats s0 = stats(dm);
        for (auto& e : dm.edge_ids()) {
            EdgeClass c = classify_edge(dm, e, true);
            for (RK mu : {RK::One, RK::Omega, RK::Omega2}) {
                AlternatingDimap r = reduce(dm, e, mu);  // revalidated internally
                DimapStats s1 = stats(r);
                if (c.kind == EdgeClass::Proper1Loop && mu == RK::One)
                    CHECK(s1.is == s0.is - 1);
                if (c.kind == EdgeClass::ProperEdge) {
                    if (mu == RK::One) CHECK(s1.is == s0.is - 1);
                    if (mu == RK::Omega) CHECK(s1.cf == s0.cf - 1);
                    if (mu == RK::Omega2) CHECK(s1.af == s0.af - 1);
                }
                if (c.kind == EdgeClass::Proper1Semiloop && !c.isOmegaSemiloop &&
                    !c.isOmega2Semiloop) {
                    if (mu == RK::One) {
                        CHECK(s1.is == s0.is + 1);
                        CHECK((s1.k == s0.k + 1 ||
                               s1.total_genus() == s0.total_genus() - 1));
                    }
                    if (mu == RK::Omega) CHECK(s1.cf == s0.cf - 1);
                    if (mu == RK::Omega2) CHECK(s1.af == s0.af - 1);
                }
            }
        }
    }
}

TEST_CASE("reduce_first keeps the order stable") {
    auto d = fix::cycle(4);
    EdgeOrdering order = {"e1", "e2", "e3", "e4"};
    auto [r, o2] = reduce_first(d, order, ReductionKind::Omega);
    // e1 and its left successor e2 are replaced by a fresh edge at the end
    REQUIRE(o2.size() == 3);
    CHECK(o2[0] == "e3");
    CHECK(o2[1] == "e4");
    CHECK(r.edges().count(o2[2]) == 1);

    auto [r1, o1] = reduce_first(fix::ultraloop(), {"e1"}, ReductionKind::Star);
    CHECK(r1.empty());
    CHECK(o1.empty());
}

TEST_CASE("face contraction normal forms") {
    auto d = contract_cfaces_to_digons(fix::c3());
    CHECK(is_isomorphic(d, fix::digon()));
    CHECK(is_isomorphic(contract_cfaces_to_digons(fix::digon()), fix::digon()));
    DimapStats before = stats(fix::cycle(5));
    auto n = contract_cfaces_to_digons(fix::cycle(5));
    CHECK(stats(n).cf == before.cf);
    auto [cw, acw] = faces(n);
    for (auto& f : cw) CHECK(f.boundary.size() == 2);

    auto m = contract_afaces_to_digons(fix::cycle(5));
    auto [mcw, macw] = faces(m);
    for (auto& f : macw) CHECK(f.boundary.size() == 2);

    // two_loop_b has clockwise faces of size one, two_loop_a anticlockwise ones
    CHECK_THROWS_AS(contract_cfaces_to_digons(fix::two_loop_b()), PreconditionError);
    CHECK_THROWS_AS(contract_afaces_to_digons(fix::two_loop_a()), PreconditionError);
}

TEST_CASE("subdivision") {
    auto d = subdivide(fix::ultraloop(), "e1");
    CHECK(is_isomorphic(d, fix::digon()));
    DimapStats s = stats(d);
    CHECK(s.is == 2);
    CHECK(s.af == 1);
    CHECK(s.cf == 1);

    auto two = subdivide(subdivide(fix::digon(), "e1"), "e2");
    DimapStats st = stats(two);
    CHECK(st.is == 4);
    CHECK(st.af == 1);
    CHECK(st.cf == 1);
    CHECK(st.edge_count == 4);
}

TEST_CASE("triality") {
    CHECK(is_isomorphic(trial(fix::ultraloop()), fix::ultraloop()));
    for (auto& dm : {fix::ultraloop(), fix::digon(), fix::c3(), fix::torus3(),
                     fix::two_loop_a(), fix::two_loop_b(), fix::cycle(4)}) {
        DimapStats s = stats(dm);
        AlternatingDimap w = trial(dm);
        DimapStats sw = stats(w);
        CHECK(sw.is == s.cf);
        CHECK(sw.af == s.is);
        CHECK(sw.cf == s.af);
        CHECK(sw.k == s.k);
        CHECK(sw.total_genus() == s.total_genus());
        CHECK(is_isomorphic(trial(trial(w)), dm));
        CHECK(is_isomorphic(trial2(dm), trial(w)));
        for (auto& e : dm.edge_ids()) {
            EdgeClass c0 = classify_edge(dm, e, true);
            EdgeClass c1 = classify_edge(w, e, true);
            if (c0.kind != EdgeClass::Proper1Semiloop || !c0.isOmegaSemiloop)
                CHECK(c1.kind == trial_class(c0.kind));
        }
    }
}

TEST_CASE("triality commutes with reductions") {
    using RK = ReductionKind;
    auto mul = [](RK a, RK b) {  // cyclic group of order three on {1, w, w2}
        int ia = a == RK::One ? 0 : a == RK::Omega ? 1 : 2;
        int ib = b == RK::One ? 0 : b == RK::Omega ? 1 : 2;
        int p = (ia + ib) % 3;
        return p == 0 ? RK::One : p == 1 ? RK::Omega : RK::Omega2;
    };
    for (auto& dm : {fix::digon(), fix::c3(), fix::two_loop_a(), fix::two_loop_b(),
                     fix::cycle(4), fix::torus3()}) {
        for (auto& e : dm.edge_ids()) {
            for (RK nu : {RK::One, RK::Omega, RK::Omega2}) {
                // trial(D)[nu]e  ==  trial(D[omega * nu]e)
                auto lhs = reduce(trial(dm), e, nu);
                auto rhs = trial(reduce(dm, e, mul(RK::Omega, nu)));
                CHECK(is_isomorphic(lhs, rhs));
                auto lhs2 = reduce(trial2(dm), e, nu);
                auto rhs2 = trial2(reduce(dm, e, mul(RK::Omega2, nu)));
                CHECK(is_isomorphic(lhs2, rhs2));
            }
        }
    }
}
