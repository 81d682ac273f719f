#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adm/census.hpp"
#include "adm/triality.hpp"
#include "fixtures.hpp"

using namespace adm;

TEST_CASE("smallest censuses have known class counts") {
    CHECK(enumerate_dimaps(0).classes.empty());

    Corpus c1 = enumerate_dimaps(1);
    REQUIRE(c1.classes.size() == 1);
    CHECK(is_isomorphic(from_triple(c1.classes[0]), fix::ultraloop()));

    // brute force over the four permutation pairs on two edges
    Corpus c2 = enumerate_dimaps(2, true);
    REQUIRE(c2.classes.size() == 3);
    int hits = 0;
    for (auto& t : c2.classes) {
        AlternatingDimap d = from_triple(t);
        if (is_isomorphic(d, fix::digon())) hits |= 1;
        if (is_isomorphic(d, fix::two_loop_a())) hits |= 2;
        if (is_isomorphic(d, fix::two_loop_b())) hits |= 4;
    }
    CHECK(hits == 7);

    // the one disconnected class on two edges is the pair of ultraloops
    Corpus c2all = enumerate_dimaps(2, false);
    CHECK(c2all.classes.size() == 4);

    CHECK_THROWS_AS(enumerate_dimaps(7), PreconditionError);
}

TEST_CASE("three-edge census contains the genus-one class") {
    Corpus c3 = enumerate_dimaps(3, true);
    int found = 0;
    for (auto& t : c3.classes) {
        DimapStats s = stats(from_triple(t));
        if (s.is == 1 && s.af == 1 && s.cf == 1 && s.total_genus() == 1) found++;
    }
    CHECK(found >= 1);
}

TEST_CASE("every census class validates with integer genus") {
    for (int m = 1; m <= 4; m++) {
        Corpus c = enumerate_dimaps(m, false);
        for (auto& t : c.classes) {
            AlternatingDimap d = from_triple(t);  // revalidates
            DimapStats s = stats(d);              // throws on a non-integer genus
            CHECK(s.edge_count == m);
            CHECK(s.k >= 1);
        }
    }
}

TEST_CASE("census is closed under triality") {
    for (int m = 1; m <= 3; m++) {
        Corpus c = enumerate_dimaps(m, true);
        std::set<std::string> keys;
        for (auto& t : c.classes) keys.insert(canonical_form(t).key);
        for (auto& t : c.classes) {
            CHECK(keys.count(canonical_form(trial(t)).key) == 1);
            CHECK(keys.count(canonical_form(trial(trial(t))).key) == 1);
        }
    }
}

TEST_CASE("census counts are reproducible") {
    auto run = [](int m) {
        std::vector<std::string> keys;
        for (auto& t : enumerate_dimaps(m, true).classes)
            keys.push_back(canonical_form(t).key);
        return keys;
    };
    for (int m = 1; m <= 3; m++) CHECK(run(m) == run(m));
}
