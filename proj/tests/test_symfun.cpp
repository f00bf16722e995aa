#include <doctest.h>

#include <random>

#include "dehnfill/defvar622.hpp"
#include "dehnfill/symfun.hpp"

using namespace dehnfill;

namespace {
MultiPoly v(Var x) { return MultiPoly::variable(x); }
MultiPoly c(long x) { return MultiPoly::constant(BigInt(x)); }
}  // namespace

TEST_SUITE_BEGIN("symfun");

TEST_CASE("s_poly") {
    CHECK(s_poly(-1).is_zero());
    CHECK(s_poly(0) == c(1));
    CHECK(s_poly(2) == v(Var::W).pow(2) + v(Var::W) * v(Var::X) + v(Var::X).pow(2));
    // (w - x) s_3 = w^4 - x^4
    CHECK((v(Var::W) - v(Var::X)) * s_poly(3) == v(Var::W).pow(4) - v(Var::X).pow(4));
}

TEST_CASE("t_poly") {
    CHECK(t_poly(-1).is_zero());
    CHECK(t_poly(0) == c(1));
    CHECK(t_poly(1) == v(Var::S1));
    CHECK(t_poly(2) == v(Var::S1).pow(2) - v(Var::S2));
    CHECK(t_poly(2) == sym_reduce(s_poly(2)));  // independent route
    Monomial m{};
    m[static_cast<int>(Var::S1)] = 3;
    m[static_cast<int>(Var::S2)] = 1;
    MultiPoly t5 = t_poly(5);
    auto it = t5.terms().find(m);
    REQUIRE(it != t5.terms().end());
    CHECK(it->second == BigInt(-4));
}

TEST_CASE("phi_star") {
    CHECK(phi_star(v(Var::S1)) == v(Var::W) + v(Var::X));
    CHECK(phi_star(t_poly(3)) == s_poly(3));
    const auto& rel = variety_relations();
    CHECK(phi_star(rel.f) == rel.P);
    CHECK_THROWS_AS(phi_star(v(Var::W)), std::domain_error);
}

TEST_CASE("symmetric identities up to degree 30") {
    MultiPoly wmx = v(Var::W) - v(Var::X);
    for (int d = -1; d <= 30; ++d) {
        MultiPoly td = t_poly(d);
        CHECK(phi_star(td) == s_poly(d));
        CHECK(wmx * s_poly(d) == v(Var::W).pow(static_cast<unsigned long>(d + 1)) -
                                     v(Var::X).pow(static_cast<unsigned long>(d + 1)));
        if (d >= 2) {
            Monomial m{};
            m[static_cast<int>(Var::S1)] = d - 2;
            m[static_cast<int>(Var::S2)] = 1;
            auto it = td.terms().find(m);
            REQUIRE(it != td.terms().end());
            CHECK(it->second == BigInt(-(d - 1)));
        }
    }
}

TEST_CASE("sym_reduce") {
    CHECK(sym_reduce(v(Var::W) + v(Var::X)) == v(Var::S1));
    CHECK(sym_reduce(v(Var::W).pow(2) + v(Var::X).pow(2)) == v(Var::S1).pow(2) - c(2) * v(Var::S2));
    CHECK_THROWS_AS(sym_reduce(v(Var::W) - v(Var::X)), NotSymmetric);
}

TEST_CASE("sym_reduce inverts phi_star on random input") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> coef(-9, 9), e1(0, 8), e2(0, 4);
    for (int i = 0; i < 200; ++i) {
        MultiPoly b;
        for (int t = 0; t < 5; ++t) {
            Monomial m{};
            int a = e1(rng), bb = e2(rng);
            if (a + 2 * bb > 8) continue;  // keep total degree <= 8
            m[static_cast<int>(Var::S1)] = a;
            m[static_cast<int>(Var::S2)] = bb;
            b += MultiPoly::term(BigInt(coef(rng)), m);
        }
        CHECK(sym_reduce(phi_star(b)) == b);
    }
}

TEST_SUITE_END();
