#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include <totring/parse.hpp>
#include <totring/ring.hpp>

using namespace totring;

TEST_CASE("basic terms") {
    CHECK(parse_ring_expr("M(2,Z(2))") == RingSpec::mat(2, RingSpec::zn(2)));
    CHECK(parse_ring_expr("GF(4) x Z(3)") ==
          RingSpec::prod({RingSpec::gf(2, 2), RingSpec::zn(3)}));
    CHECK(parse_ring_expr("GF(9)") == RingSpec::gf(3, 2));
    CHECK(parse_ring_expr("GF(2,3)") == RingSpec::gf(2, 3));
    CHECK(parse_ring_expr("T(2,GF(2))") == RingSpec::tri(2, RingSpec::gf(2)));
    CHECK(parse_ring_expr("  M( 2 , GF( 4 ) ) ") == RingSpec::mat(2, RingSpec::gf(2, 2)));
}

TEST_CASE("products are flat unless parenthesized") {
    auto flat = parse_ring_expr("Z(2) x Z(3) x Z(5)");
    REQUIRE(flat.kind == RingSpec::Kind::Prod);
    CHECK(flat.sub.size() == 3);
    auto nested = parse_ring_expr("(Z(2) x Z(3)) x Z(5)");
    REQUIRE(nested.kind == RingSpec::Kind::Prod);
    REQUIRE(nested.sub.size() == 2);
    CHECK(nested.sub[0].kind == RingSpec::Kind::Prod);
}

TEST_CASE("syntax errors carry offsets") {
    try {
        parse_ring_expr("M(2,");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_ring_expr(""), syntax_error);
    CHECK_THROWS_AS(parse_ring_expr("Q(4)"), syntax_error);
    CHECK_THROWS_AS(parse_ring_expr("Z(4) extra"), syntax_error);
    CHECK_THROWS_AS(parse_ring_expr("T(2,M(2,Z(2)))"), syntax_error);
}

TEST_CASE("semantic errors are deferred to ring construction") {
    auto gf6 = parse_ring_expr("GF(6)");
    CHECK(gf6 == RingSpec::gf(6, 1));
    CHECK_THROWS_AS(make_ring(gf6), spec_error);
    CHECK_THROWS_AS(make_ring(parse_ring_expr("GF(6,2)")), spec_error);
}

TEST_CASE("print/parse round trip") {
    SUBCASE("hand-picked") {
        for (const char* text :
             {"Z(6)", "GF(2,2)", "M(2,GF(3,1))", "T(2,GF(2,1))", "Z(2) x Z(3)",
              "(Z(2) x Z(3)) x M(2,Z(2))", "M(2,Z(2) x Z(3))"}) {
            RingSpec s = parse_ring_expr(text);
            CHECK(parse_ring_expr(print_spec(s)) == s);
        }
        CHECK(print_spec(parse_ring_expr("GF(4)")) == "GF(2,2)");
    }
    SUBCASE("random specs") {
        std::mt19937 rng(2024);
        std::function<RingSpec(int)> gen = [&](int depth) -> RingSpec {
            int pick = rng() % (depth > 0 ? 5 : 2);
            switch (pick) {
            case 0: return RingSpec::zn(2 + rng() % 10);
            case 1: return RingSpec::gf(rng() % 2 ? 2 : 3, 1 + rng() % 2);
            case 2: return RingSpec::mat(1 + rng() % 2, gen(depth - 1));
            case 3: return RingSpec::tri(2, RingSpec::gf(2 + (rng() % 2), 1));
            default: {
                std::vector<RingSpec> fs;
                std::size_t k = 2 + rng() % 2;
                for (std::size_t i = 0; i < k; ++i) fs.push_back(gen(depth - 1));
                return RingSpec::prod(std::move(fs));
            }
            }
        };
        for (int i = 0; i < 200; ++i) {
            RingSpec s = gen(2);
            CHECK(parse_ring_expr(print_spec(s)) == s);
        }
    }
}

TEST_CASE("table specs load from JSON files") {
    const std::string path = "test_table_z4.json";
    {
        std::ofstream out(path);
        out << R"({"order": 4, "zero": 0, "one": 1,
                   "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
                   "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]]})";
    }
    RingSpec s = parse_ring_expr("@" + path);
    CHECK(s.kind == RingSpec::Kind::Table);
    Ring r = make_ring(s);
    CHECK(r.order == 4);
    CHECK(r.characteristic == 4);
    CHECK(r.radical().size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("table file errors") {
    CHECK_THROWS_AS(parse_ring_expr("@no_such_file.json"), spec_error);
    const std::string path = "test_table_bad.json";
    {
        std::ofstream out(path);
        out << R"({"order": 3})";
    }
    CHECK_THROWS_AS(parse_ring_expr("@" + path), spec_error);
    {
        std::ofstream out(path);
        out << "not json";
    }
    CHECK_THROWS_AS(parse_ring_expr("@" + path), spec_error);
    std::remove(path.c_str());
}

TEST_CASE("tables embedded in larger expressions") {
    const std::string path = "test_table_embed.json";
    {
        std::ofstream out(path);
        out << R"({"order": 4, "zero": 0, "one": 1,
                   "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
                   "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]]})";
    }
    RingSpec s = parse_ring_expr("@" + path + " x Z(3)");
    REQUIRE(s.kind == RingSpec::Kind::Prod);
    CHECK(s.sub[0].kind == RingSpec::Kind::Table);
    CHECK(make_ring(s).order == 12);
    std::remove(path.c_str());
}
