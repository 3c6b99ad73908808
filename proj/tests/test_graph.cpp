#include <doctest.h>

#include <sstream>

#include <totring/total_graph.hpp>

using namespace totring;

TEST_CASE("tau(Z_2 x Z_2) is the 4-cycle") {
    Ring r = make_ring(RingSpec::prod({RingSpec::zn(2), RingSpec::zn(2)}));
    CHECK(r.zero_divisors().size() == 3);
    TotalGraph g = build_total_graph(r);
    for (auto d : g.degree) CHECK(d == 2);
    CHECK(is_connected(g));
    CHECK(diameter(g) == std::size_t(2));
    CHECK(is_eulerian(g));
}

TEST_CASE("tau(Z_4) is two disjoint edges") {
    Ring r = make_ring(RingSpec::zn(4));
    TotalGraph g = build_total_graph(r);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(is_connected(g));
    CHECK_FALSE(diameter(g).has_value());
}

TEST_CASE("tau(M_2(GF(2))) is 9-regular with 72 edges") {
    Ring r = make_ring(RingSpec::mat(2, RingSpec::gf(2)));
    CHECK(r.zero_divisors().size() == 10);
    TotalGraph g = build_total_graph(r);
    std::size_t degsum = 0;
    for (auto d : g.degree) {
        CHECK(d == 9);
        degsum += d;
    }
    CHECK(degsum / 2 == 72);
}

TEST_CASE("tau of a char-2 field has no edges") {
    Ring r = make_ring(RingSpec::gf(2, 2));
    TotalGraph g = build_total_graph(r);
    for (auto d : g.degree) CHECK(d == 0);
}

TEST_CASE("diameter is exactly 2 for non-local rings") {
    for (auto spec : {RingSpec::zn(6), RingSpec::zn(12), RingSpec::tri(2, RingSpec::gf(2)),
                      RingSpec::mat(2, RingSpec::gf(2))}) {
        Ring r = make_ring(spec);
        TotalGraph g = build_total_graph(r);
        CHECK(diameter(g) == std::size_t(2));
    }
}

TEST_CASE("eulerian exactly for products of even-order fields") {
    auto eulerian_of = [](const RingSpec& s) {
        Ring r = make_ring(s);
        TotalGraph g = build_total_graph(r);
        return is_eulerian(g);
    };
    CHECK(eulerian_of(RingSpec::prod({RingSpec::zn(2), RingSpec::zn(2)})));
    CHECK(eulerian_of(RingSpec::prod({RingSpec::gf(2, 2), RingSpec::gf(2)})));
    CHECK_FALSE(eulerian_of(RingSpec::prod({RingSpec::zn(2), RingSpec::zn(3)})));
    CHECK_FALSE(eulerian_of(RingSpec::zn(6)));
    CHECK_FALSE(eulerian_of(RingSpec::mat(2, RingSpec::gf(2))));
}

TEST_CASE("component profiles of local rings") {
    using Kind = ComponentProfile::Kind;
    auto profile_of = [](const RingSpec& s) {
        Ring r = make_ring(s);
        TotalGraph g = build_total_graph(r);
        return component_profile(g);
    };
    SUBCASE("Z_4: two K_2") {
        auto p = profile_of(RingSpec::zn(4));
        REQUIRE(p.entries.size() == 1);
        CHECK(p.entries[0].kind == Kind::Complete);
        CHECK(p.entries[0].size == 2);
        CHECK(p.entries[0].count == 2);
    }
    SUBCASE("Z_9: K_3 plus K_{3,3}") {
        auto p = profile_of(RingSpec::zn(9));
        REQUIRE(p.entries.size() == 2);
        CHECK(p.entries[0].kind == Kind::Complete);
        CHECK(p.entries[0].size == 3);
        CHECK(p.entries[0].count == 1);
        CHECK(p.entries[1].kind == Kind::Biclique);
        CHECK(p.entries[1].size == 3);
        CHECK(p.entries[1].count == 1);
    }
    SUBCASE("Z_3: K_1 plus K_{1,1}") {
        auto p = profile_of(RingSpec::zn(3));
        REQUIRE(p.entries.size() == 2);
        CHECK(p.entries[0].kind == Kind::Complete);
        CHECK(p.entries[0].size == 1);
        CHECK(p.entries[0].count == 1);
        CHECK(p.entries[1].kind == Kind::Biclique);
        CHECK(p.entries[1].size == 1);
        CHECK(p.entries[1].count == 1);
    }
    SUBCASE("profile vertices sum to the order") {
        for (auto s : {RingSpec::zn(8), RingSpec::gf(3, 2), RingSpec::zn(6)})
            CHECK(profile_of(s).total_vertices() == spec_order(s));
    }
}

TEST_CASE("degree law split for odd order") {
    Ring r = make_ring(RingSpec::zn(9));
    TotalGraph g = build_total_graph(r);
    const std::size_t z = r.zero_divisors().size();
    for (std::size_t v = 0; v < r.order; ++v) {
        if (r.is_unit(static_cast<elem>(v))) CHECK(g.degree[v] == z);
        else CHECK(g.degree[v] == z - 1);
    }
}

TEST_CASE("adjacency is symmetric and loop-free") {
    Ring r = make_ring(RingSpec::zn(12));
    TotalGraph g = build_total_graph(r);
    for (std::size_t a = 0; a < g.n; ++a) {
        CHECK_FALSE(g.adjacent(a, a));
        for (std::size_t b = 0; b < g.n; ++b) CHECK(g.adjacent(a, b) == g.adjacent(b, a));
    }
}

TEST_CASE("DOT export") {
    Ring r = make_ring(RingSpec::zn(4));
    TotalGraph g = build_total_graph(r);
    std::ostringstream os;
    export_dot(g, os);
    std::string dot = os.str();
    CHECK(dot.find("graph tau {") == 0);
    CHECK(dot.find("n0 -- n2") != std::string::npos);
    CHECK(dot.find("n1 -- n3") != std::string::npos);
    std::size_t edges = 0, at = 0;
    while ((at = dot.find(" -- ", at)) != std::string::npos) { ++edges; at += 4; }
    CHECK(edges == 2);
}

TEST_CASE("DOT edge count for M_2(GF(2))") {
    Ring r = make_ring(RingSpec::mat(2, RingSpec::gf(2)));
    TotalGraph g = build_total_graph(r);
    std::ostringstream os;
    export_dot(g, os);
    std::string dot = os.str();
    std::size_t edges = 0, at = 0;
    while ((at = dot.find(" -- ", at)) != std::string::npos) { ++edges; at += 4; }
    CHECK(edges == 72);
}
