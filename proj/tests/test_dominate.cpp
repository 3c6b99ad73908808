#include <doctest.h>

#include <totring/dominate.hpp>

#include "oracles.hpp"

using namespace totring;

TEST_CASE("explicit first-row dominating sets") {
    SUBCASE("M_2(GF(2)): {0, E11, E12}") {
        Ring m = make_ring(RingSpec::mat(2, RingSpec::gf(2)));
        auto d = matrix_dominating_set(m);
        CHECK(d.members == std::vector<elem>{0, 1, 2});
        TotalGraph g = build_total_graph(m);
        CHECK(verify_dominating(g, d.members));
    }
    SUBCASE("M_2(GF(3)): size 5") {
        Ring m = make_ring(RingSpec::mat(2, RingSpec::gf(3)));
        CHECK(matrix_dominating_set(m).members.size() == 5);
    }
    SUBCASE("M_3(GF(2)): size 4") {
        Ring m = make_ring(RingSpec::mat(3, RingSpec::gf(2)));
        auto d = matrix_dominating_set(m);
        CHECK(d.members == std::vector<elem>{0, 1, 2, 4});
    }
    SUBCASE("rejected off the matrix domain") {
        CHECK_THROWS_AS(matrix_dominating_set(make_ring(RingSpec::zn(6))), invalid_input_error);
    }
}

TEST_CASE("exact solver agrees with subset enumeration") {
    for (auto spec : {RingSpec::zn(3), RingSpec::zn(4), RingSpec::zn(6), RingSpec::zn(9),
                      RingSpec::prod({RingSpec::zn(2), RingSpec::zn(2)}), RingSpec::gf(3, 2),
                      RingSpec::tri(2, RingSpec::gf(2)), RingSpec::zn(12)}) {
        Ring r = make_ring(spec);
        TotalGraph g = build_total_graph(r);
        auto solve = gamma_exact(g);
        CHECK(solve.exact == oracles::gamma_subsets(g));
        CHECK(verify_dominating(g, solve.witness.members));
        CHECK(solve.exact >= solve.lower_bound);
    }
}

TEST_CASE("reference gamma values") {
    auto gamma_of = [](const RingSpec& s, bool slow = false) {
        Ring r = make_ring(s);
        TotalGraph g = build_total_graph(r);
        SolveOptions opt;
        opt.slow = slow;
        return gamma_exact(g, opt).exact;
    };
    CHECK(gamma_of(RingSpec::mat(2, RingSpec::gf(2))) == 3);
    CHECK(gamma_of(RingSpec::zn(3)) == 2);
    CHECK(gamma_of(RingSpec::zn(4)) == 2);
    CHECK(gamma_of(RingSpec::zn(6)) == 2);
    CHECK(gamma_of(RingSpec::zn(9)) == 3);
}

TEST_CASE("solver witness is deterministic") {
    Ring r = make_ring(RingSpec::mat(2, RingSpec::gf(2)));
    TotalGraph g = build_total_graph(r);
    CHECK(gamma_exact(g).witness.members == gamma_exact(g).witness.members);
}

TEST_CASE("solve guard semantics") {
    Ring m3 = make_ring(RingSpec::mat(3, RingSpec::gf(2)));
    TotalGraph g = build_total_graph(m3);
    CHECK_THROWS_AS(gamma_exact(g), solve_guard_error); // 512 > 256 without slow
    SolveOptions tight;
    tight.slow = true;
    tight.solve_guard = 100;
    CHECK_THROWS_AS(gamma_exact(g, tight), solve_guard_error);
}

TEST_CASE("local formulas") {
    Ring z4 = make_ring(RingSpec::zn(4));
    Ring z3 = make_ring(RingSpec::zn(3));
    Ring z9 = make_ring(RingSpec::zn(9));
    CHECK(gamma_local_formula(z4) == 2);
    CHECK(gamma_local_formula(z3) == 2);
    CHECK(gamma_local_formula(z9) == 2); // as stated, not corrected
    TotalGraph g4 = build_total_graph(z4);
    TotalGraph g9 = build_total_graph(z9);
    CHECK(gamma_from_profile(z4, g4) == 2);
    CHECK(gamma_from_profile(z9, g9) == 3);
    Ring z6 = make_ring(RingSpec::zn(6));
    CHECK_THROWS_AS(gamma_local_formula(z6), invalid_input_error);
}

TEST_CASE("shape upper bound") {
    CHECK(gamma_upper(make_ring(RingSpec::mat(2, RingSpec::gf(2)))) == std::size_t(3));
    CHECK(gamma_upper(make_ring(RingSpec::zn(3))) == std::size_t(3));
    CHECK(gamma_upper(make_ring(
              RingSpec::prod({RingSpec::mat(2, RingSpec::gf(2)), RingSpec::gf(3)}))) ==
          std::size_t(3));
    RingSpec table;
    table.kind = RingSpec::Kind::Table;
    table.table_order = 4;
    table.table_zero = 0;
    table.table_one = 1;
    table.table_add.resize(16);
    table.table_mul.resize(16);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            table.table_add[a * 4 + b] = (a + b) % 4;
            table.table_mul[a * 4 + b] = (a * b) % 4;
        }
    CHECK_FALSE(gamma_upper(make_ring(table)).has_value());
}

TEST_CASE("Z_9 report exposes the formula gap without reconciling it") {
    Ring r = make_ring(RingSpec::zn(9));
    TotalGraph g = build_total_graph(r);
    GammaReport rep = gamma_report(r, g);
    REQUIRE(rep.exact.has_value());
    CHECK(*rep.exact == 3);
    CHECK(*rep.local_formula == 2);
    CHECK(*rep.profile_gamma == 3);
    CHECK_FALSE(*rep.formula_agrees);
    CHECK(*rep.profile_agrees);
    CHECK(rep.witness_ok);
}

TEST_CASE("determinant cofactor expansion") {
    Ring f2 = make_ring(RingSpec::gf(2));
    Ring f3 = make_ring(RingSpec::zn(3));
    SUBCASE("exhaustive 2x2 over GF(2)") {
        MatrixSpace ms(2, f2);
        for (std::uint64_t a = 0; a < ms.size(); ++a)
            for (std::size_t j = 1; j <= 2; ++j)
                for (elem x = 0; x < 2; ++x) CHECK(det_expansion_check(ms, a, j, x));
    }
    SUBCASE("identity over GF(3), j = 1, x = 2") {
        MatrixSpace ms(2, f3);
        std::uint64_t i2 = 1 + 27; // [[1,0],[0,1]]
        CHECK(ms.det(i2) == 1);
        CHECK(ms.det(ms.add(i2, ms.unit_scalar(2, 1, 1))) == 0); // det diag(3,1) = 0
        CHECK(det_expansion_check(ms, i2, 1, 2));
    }
    SUBCASE("x = 0 reduces to det(A) = det(A)") {
        MatrixSpace ms(2, f3);
        for (std::uint64_t a = 0; a < ms.size(); ++a) CHECK(det_expansion_check(ms, a, 1, 0));
    }
    SUBCASE("E_21 over GF(2), j = 2, x = 1: both sides 1") {
        MatrixSpace ms(2, f2);
        std::uint64_t e21 = 4; // entry (2,1)
        CHECK(ms.det(ms.add(e21, ms.unit_scalar(1, 1, 2))) == 1);
        CHECK(ms.first_row_minor_det(e21, 2) == 1);
        CHECK(det_expansion_check(ms, e21, 2, 1));
    }
}

TEST_CASE("big-carrier dominating set check stays available") {
    Ring f3 = make_ring(RingSpec::zn(3));
    MatrixSpace ms(3, f3); // 19683 matrices, beyond the realized-ring guard
    auto d = matrix_dominating_set_big(ms);
    CHECK(d.members.size() == 7);
    CHECK(d.verified);
}

TEST_CASE("quotient invariance where it holds, and the Z_9 counterexample") {
    CHECK(check_quotient_invariance(make_ring(RingSpec::zn(12))).equal);
    CHECK(check_quotient_invariance(make_ring(RingSpec::tri(2, RingSpec::gf(2)))).equal);
    CHECK(check_quotient_invariance(make_ring(RingSpec::gf(2, 2))).equal);
    auto z9 = check_quotient_invariance(make_ring(RingSpec::zn(9)));
    CHECK_FALSE(z9.equal);
    CHECK(z9.gamma_ring == 3);
    CHECK(z9.gamma_quotient == 2);
    CHECK(z9.project_transfer_ok);   // downward transfer always works
    CHECK_FALSE(z9.reps_transfer_ok); // upward transfer is the broken direction
}

TEST_CASE("product minimum holds on the stated pairs and fails at (Z_3, Z_9)") {
    Ring z2 = make_ring(RingSpec::zn(2));
    Ring z3 = make_ring(RingSpec::zn(3));
    Ring z9 = make_ring(RingSpec::zn(9));
    CHECK(check_product_min(z2, z3).equal);
    CHECK(check_product_min(z2, z2).equal);
    CHECK(check_product_min(z3, z3).equal);
    auto bad = check_product_min(z3, z9);
    CHECK_FALSE(bad.equal);
    CHECK(bad.gamma_product == 3);
    CHECK(std::min(bad.gamma_left, bad.gamma_right) == 2);
    // confirm the counterexample with the independent oracle
    Ring p = make_ring(RingSpec::prod({RingSpec::zn(3), RingSpec::zn(9)}));
    TotalGraph g = build_total_graph(p);
    CHECK(oracles::gamma_subsets(g) == 3);
}

TEST_CASE("conjecture harness") {
    SUBCASE("confirmed on M_2(GF(2))") {
        Ring m = make_ring(RingSpec::mat(2, RingSpec::gf(2)));
        TotalGraph g = build_total_graph(m);
        auto c = conjecture_check(m, g);
        CHECK(c.status == ConjectureStatus::Confirmed);
        CHECK(*c.bound == 3);
        CHECK(*c.exact == 3);
    }
    SUBCASE("inapplicable when some block is 1x1") {
        Ring r = make_ring(RingSpec::zn(6));
        TotalGraph g = build_total_graph(r);
        CHECK(conjecture_check(r, g).status == ConjectureStatus::Inapplicable);
    }
    SUBCASE("refuted on M_2(GF(3)) with a verified smaller witness") {
        Ring m = make_ring(RingSpec::mat(2, RingSpec::gf(3)));
        TotalGraph g = build_total_graph(m);
        auto c = conjecture_check(m, g);
        CHECK(c.status == ConjectureStatus::Refuted);
        CHECK(*c.bound == 5);
        CHECK(*c.exact == 4);
        CHECK(c.witness.size() == 4);
        CHECK(verify_dominating(g, c.witness));
    }
}

TEST_CASE("report invariants on matrix rings") {
    Ring m = make_ring(RingSpec::mat(2, RingSpec::gf(2)));
    TotalGraph g = build_total_graph(m);
    GammaReport rep = gamma_report(m, g);
    REQUIRE(rep.exact.has_value());
    CHECK(*rep.exact <= matrix_dominating_set(m).members.size());
    CHECK(*rep.exact >= rep.lower_bound);
    CHECK(*rep.within_upper);
}
