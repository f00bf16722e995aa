#include <doctest.h>

#include "dehnfill/defvar622.hpp"
#include "dehnfill/symfun.hpp"

using namespace dehnfill;

namespace {
MultiPoly v(Var x) { return MultiPoly::variable(x); }
MultiPoly c(long x) { return MultiPoly::constant(BigInt(x)); }

Surd eval_at_ww(const MultiPoly& p, const Surd& val) {
    std::array<const Surd*, kNumVars> point{};
    point[static_cast<int>(Var::W)] = &val;
    point[static_cast<int>(Var::X)] = &val;
    return p.eval_surd(point);
}
}  // namespace

TEST_SUITE_BEGIN("defvar622");

TEST_CASE("variety relations and the distinguished points") {
    const auto& rel = variety_relations();
    CHECK(rel.P.to_string() == "-w^2*x^2 + w^2*x + w*x^2 - w*x + 1");
    CHECK(phi_star(rel.f) == rel.P);

    Rational half(BigInt(1), BigInt(2));
    // complete structure w = x = (1 + i sqrt(3))/2
    CHECK(eval_at_ww(rel.P, Surd(half, half, BigInt(-3))).is_zero());
    // the two real points w = x = (1 +- sqrt(5))/2
    CHECK(eval_at_ww(rel.P, Surd(half, half, BigInt(5))).is_zero());
    CHECK(eval_at_ww(rel.P, Surd(half, -half, BigInt(5))).is_zero());
    // a generic point is not on the curve
    CHECK(!eval_at_ww(rel.P, Surd(Rational(2))).is_zero());
}

TEST_CASE("surgery polynomials match the published displays") {
    CHECK(g_poly(0, 1) == c(1) - v(Var::W) - v(Var::X));
    CHECK(g_poly(1, 1) == v(Var::W) + v(Var::X) - c(2));
    CHECK(g_poly(2, 0) == v(Var::W) + v(Var::X) - c(2) * v(Var::W) * v(Var::X));
    CHECK(g_poly(1, 0) == c(1));
    CHECK(h_poly(1, 1) == v(Var::S1) - c(2));
    CHECK(h_poly(2, 0) == v(Var::S1) - c(2) * v(Var::S2));
    CHECK(h_poly(2, 1) == v(Var::S1) * v(Var::S2) - c(3) * v(Var::S2) + c(1));
    CHECK_THROWS_AS(g_poly(0, 0), BothZero);
}

TEST_CASE("surgery numerator factors as (w - x) g") {
    MultiPoly wmx = v(Var::W) - v(Var::X);
    for (long p = 0; p <= 6; ++p)
        for (long q = 0; q <= 6; ++q) {
            if (p == 0 && q == 0) continue;
            CHECK(surgery_numerator(p, q) == wmx * g_poly(p, q));
            CHECK(phi_star(h_poly(p, q)) == g_poly(p, q));
        }
}

TEST_CASE("hprime") {
    CHECK(hprime_poly(2, 1) == v(Var::S2).pow(2) - c(2) * v(Var::S2));
    CHECK(hprime_poly(2, 0) == v(Var::S2).pow(2) - v(Var::S2) + c(1));
    MultiPoly h12 = hprime_poly(1, 2);
    CHECK(h12.degree(Var::S2) == 6);  // 4q - 2
    auto coeffs = h12.univariate_coeffs(Var::S2);
    CHECK(coeffs.front().is_unit());
    CHECK(coeffs.back().is_unit());
}

TEST_CASE("unit integer flag") {
    CHECK(unit_integer_flag(1, 2).applicable);
    CHECK(unit_integer_flag(1, 2).unit);
    CHECK(!unit_integer_flag(2, 1).applicable);  // p = 2q
    CHECK(!unit_integer_flag(5, 0).applicable);  // q = 0
    CHECK(unit_integer_flag(3, 1).applicable);
    CHECK(unit_integer_flag(3, 1).unit);
}

TEST_CASE("sigma2 eliminations") {
    FieldReport r20 = sigma2_minpoly(2, 0);
    CHECK(r20.poly == v(Var::S2).pow(2) - v(Var::S2) + c(1));
    CHECK(r20.verdict == Verdict::QuadImag);
    CHECK(r20.real_root_count == 0);

    FieldReport r30 = sigma2_minpoly(3, 0);
    CHECK(r30.filtered == v(Var::S2).pow(2) + c(1));

    FieldReport r01 = sigma2_minpoly(0, 1);
    CHECK(r01.filtered_empty);  // sigma2 = +-1, all real: no geometric candidate
    CHECK(r01.verdict == Verdict::RealOnly);
}

TEST_CASE("cusp parameter eliminations") {
    FieldReport r20 = sigma1_minpoly(2, 0);
    CHECK(r20.filtered == v(Var::T).pow(2) - c(2) * v(Var::T) + c(4));
    CHECK(r20.verdict == Verdict::QuadImag);
    REQUIRE(r20.quad_imag_fields.size() == 1);
    CHECK(r20.quad_imag_fields[0] == BigInt(-3));

    FieldReport r30 = sigma1_minpoly(3, 0);
    CHECK(r30.filtered == v(Var::T).pow(2) - c(2) * v(Var::T) + c(5));
    CHECK(r30.quad_imag_fields[0] == BigInt(-1));

    FieldReport r11 = sigma1_minpoly(1, 1);
    CHECK(r11.poly == v(Var::T) - c(2));
    CHECK(r11.filtered_empty);  // all real: non-hyperbolicity certificate
    CHECK(r11.verdict == Verdict::RealOnly);
}

TEST_CASE("shape polynomial of the degree-one triangulation") {
    FieldReport r43 = w_minpoly(4, 3);
    REQUIRE(r43.factors.size() == 2);
    for (const auto& f : r43.factors) CHECK(f.degree == 10);
    CHECK(r43.verdict == Verdict::HigherDegree);

    FieldReport r20 = w_minpoly(2, 0);
    CHECK(r20.degree <= 4);
    CHECK(r20.degree >= 1);

    FieldReport r10 = w_minpoly(1, 0);
    CHECK(r10.degree == 0);  // constant g: empty variety
}

TEST_CASE("holonomy derivative forms reduce mod P") {
    auto mus = mu_values();  // throws SelfCheckFailed if any identity fails
    REQUIRE(mus.size() == 3);
    CHECK(mus[0].num == v(Var::X) * (c(1) - v(Var::W)));

    // mu(m1) = 1 at the complete structure, evaluated in Q(sqrt(-3))
    Rational half(BigInt(1), BigInt(2));
    Surd wv(half, half, BigInt(-3));
    std::array<const Surd*, kNumVars> point{};
    point[static_cast<int>(Var::W)] = &wv;
    point[static_cast<int>(Var::X)] = &wv;
    Surd num = mus[2].num.eval_surd(point);
    Surd den = mus[2].den.eval_surd(point);
    CHECK(num * den.inverse() == Surd(Rational(1)));
}

TEST_CASE("holonomy traces") {
    HolonomyTraces h = holonomy_traces();  // self-verifying
    CHECK(h.tr_a == c(2));
    CHECK(h.tr_e == v(Var::W) * v(Var::X));
    CHECK(h.tr_ae == v(Var::W) + v(Var::X));
    const auto& rel = variety_relations();
    CHECK(pseudo_rem(h.det_e - c(1), rel.P, Var::W).is_zero());
    MultiPoly target = (v(Var::W) * v(Var::X)).pow(2) - c(2);
    CHECK(pseudo_rem(h.tr_e2 - target, rel.P, Var::W).is_zero());
}

TEST_CASE("p0 family analysis") {
    AxisAnalysis p2 = p0_analysis(2);
    CHECK(p2.sigma2_poly == v(Var::S2).pow(2) - v(Var::S2) + c(1));
    CHECK(p2.classification == Verdict::QuadImag);
    REQUIRE(p2.quad_imag_fields.size() == 1);
    CHECK(p2.quad_imag_fields[0] == BigInt(-3));

    AxisAnalysis p3 = p0_analysis(3);
    CHECK(p3.sigma2_poly == v(Var::S2).pow(2) + c(1));
    CHECK(p3.quad_imag_fields[0] == BigInt(-1));

    AxisAnalysis p1 = p0_analysis(1);
    CHECK(p1.sigma2_poly == v(Var::S2).pow(2) - c(3) * v(Var::S2) + c(1));
    CHECK(p1.classification == Verdict::RealOnly);  // non-hyperbolic certificate

    CHECK(p0_analysis(7).classification == Verdict::HigherDegree);
    // degree-four fields for p = 4, 5, 6
    CHECK(p0_analysis(4).classification == Verdict::HigherDegree);
    CHECK(p0_analysis(5).classification == Verdict::HigherDegree);
    CHECK(p0_analysis(6).classification == Verdict::HigherDegree);
}

TEST_CASE("2q family analysis") {
    AxisAnalysis q1 = twoq_analysis(1);
    MultiPoly s2 = v(Var::S2);
    CHECK(q1.resultant_raw.sign_normalized() == s2.pow(4) - c(3) * s2.pow(3) + s2.pow(2));
    CHECK(q1.classification == Verdict::RealOnly);

    AxisAnalysis q2 = twoq_analysis(2);
    CHECK(q2.sigma2_poly == s2.pow(4) - c(3) * s2.pow(3) + s2.pow(2) + c(2));
    CHECK(q2.classification == Verdict::HigherDegree);
    // irreducible: the classification found no factor of degree <= 2
    bool single = q2.report.factors.size() == 1 && q2.report.factors[0].degree == 4;
    CHECK(single);

    CHECK(twoq_analysis(3).classification == Verdict::HigherDegree);

    AxisAnalysis q5 = twoq_analysis(5);
    CHECK(q5.sigma2_poly.degree(Var::S2) == 8);
    CHECK(q5.classification != Verdict::QuadImag);
}

TEST_CASE("quad imag sweep") {
    SweepResult s = quad_imag_sweep(5);
    REQUIRE(s.quad_imag_hits.size() == 2);
    CHECK(s.quad_imag_hits[0].p == 2);
    CHECK(s.quad_imag_hits[0].q == 0);
    CHECK(s.quad_imag_hits[1].p == 3);
    CHECK(s.quad_imag_hits[1].q == 0);
    for (const auto& e : s.entries) {
        if ((e.p == 1 && e.q == 1) || (e.p == 0 && e.q == 1) || (e.p == 2 && e.q == 1) ||
            (e.p == 1 && e.q == 0)) {
            CHECK(e.classification == Verdict::RealOnly);
            CHECK(e.non_hyperbolic_certificate);
        }
    }
}

TEST_CASE("slope bundle self-checks") {
    SlopePolyBundle b = slope_bundle(2, 1);
    CHECK(phi_star(b.h) == b.g);
    CHECK(b.hprime == v(Var::S2).pow(2) - c(2) * v(Var::S2));
}

TEST_CASE("surgery equation holds numerically at high-precision roots") {
    // evaluate [x(1-w)/(w(1-x))]^p [w(1-w)/(x(1-x))]^q at a complex root of
    // {P = 0, g = 0} reconstructed from a sigma2 root
    long saved = BigFloat::working_precision();
    BigFloat::set_working_precision(512);
    for (auto [p, q] : {std::pair<long, long>{4, 3}, {5, 2}, {2, 0}}) {
        FieldReport s2rep = sigma2_minpoly(p, q);
        REQUIRE(!s2rep.filtered_empty);
        auto roots = approx_roots(s2rep.filtered, Var::S2, 60);
        const RootEnclosure* pick = nullptr;
        for (const auto& r : roots)
            if (r.certified_nonreal) pick = &r;
        REQUIRE(pick != nullptr);
        ComplexF s2{pick->re, pick->im};
        ComplexF one{BigFloat(1), BigFloat(0)};
        ComplexF s1 = s2 + one - one / s2;
        // w, x are the roots of y^2 - s1 y + s2
        ComplexF half{BigFloat(Rational(BigInt(1), BigInt(2))), BigFloat(0)};
        ComplexF disc = (s1 * s1 - ComplexF{BigFloat(4), BigFloat(0)} * s2).sqrt();
        ComplexF w = (s1 + disc) * half;
        ComplexF x = (s1 - disc) * half;
        ComplexF mu_m = (x * (one - w)) / (w * (one - x));
        ComplexF mu_l = (w * (one - w)) / (x * (one - x));
        ComplexF val = mu_m.pow(p) * mu_l.pow(q) - one;
        BigFloat tol(Rational(BigInt(1), BigInt(10).pow(20)));
        CHECK(val.abs() < tol);
    }
    BigFloat::set_working_precision(saved);
}

TEST_SUITE_END();
