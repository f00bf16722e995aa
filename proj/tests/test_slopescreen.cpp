#include <doctest.h>

#include <algorithm>
#include <set>

#include "dehnfill/slopescreen.hpp"
#include "oracles.hpp"

using namespace dehnfill;

TEST_SUITE_BEGIN("slopescreen");

namespace {
const CuspShape kHexShape{Rational(0), Rational(3)};
const Rational kBound = Rational::parse("75832/10000");

std::set<std::pair<long, long>> to_set(const std::vector<Slope>& v) {
    std::set<std::pair<long, long>> out;
    for (const auto& s : v) out.insert({s.p, s.q});
    return out;
}
}  // namespace

TEST_CASE("normalized length squared") {
    NormalizedLengthSq a = nl_sq({1, 0}, kHexShape);
    CHECK(a.num == Rational(1));
    CHECK(a.im_sq == Rational(3));
    CHECK(nl_sq({2, 3}, kHexShape).num == Rational(31));
    CHECK(nl_sq({0, 1}, kHexShape).num == Rational(3));
    // non-zero real part contributes the cross term
    CuspShape skew{Rational(1), Rational(2)};
    CHECK(nl_sq({1, 1}, skew).num == Rational(6));  // (1+1)^2 + 2
}

TEST_CASE("length filter at the published bound") {
    CHECK(passes_length({8, 1}, kHexShape, kBound));
    CHECK(!passes_length({10, 1}, kHexShape, kBound));
    CHECK(passes_length({2, 4}, kHexShape, kBound));
}

TEST_CASE("linking filter") {
    CHECK(linking_filter({2, 1}, 3).pass);
    LinkingVerdict f = linking_filter({3, 1}, 3);
    CHECK(!f.pass);
    CHECK(f.covering_components == 3);
    LinkingVerdict z = linking_filter({2, 1}, 0);
    CHECK(!z.pass);
    CHECK(z.zero_linking_rule);
    CHECK(linking_filter({1, 7}, 0).pass);
    CHECK(!linking_filter({0, 1}, 3).pass);  // gcd(0, 3) = 3
}

TEST_CASE("gcd filter") {
    std::vector<long> allowed{1, 2, 4};
    CHECK(gcd_filter({4, 4}, allowed));
    CHECK(!gcd_filter({3, 3}, allowed));
    CHECK(!gcd_filter({6, 3}, allowed));
    CHECK(gcd_filter({8, 2}, allowed));
}

TEST_CASE("length filter is monotone on the box") {
    LinkSpec spec = preset_622();
    for (long p = 0; p <= 12; ++p)
        for (long q = 0; q <= 8; ++q) {
            if (p == 0 && q == 0) continue;
            if (!passes_length({p, q}, spec.cusp_shape, spec.length_bound)) continue;
            for (long pp = 0; pp <= p; ++pp)
                for (long qq = 0; qq <= q; ++qq) {
                    if (pp == 0 && qq == 0) continue;
                    CHECK(passes_length({pp, qq}, spec.cusp_shape, spec.length_bound));
                }
        }
}

TEST_CASE("622 screen: exact orbifold set, manifold superset, flagged extras") {
    ScreenReport rep = screen(preset_622());
    std::set<std::pair<long, long>> expect_orb{{2, 0}, {2, 2}, {2, 4}, {4, 0}, {4, 2}, {4, 4}, {8, 2}};
    CHECK(to_set(rep.orbifold_pass) == expect_orb);
    CHECK(rep.orbifold_extras.empty());

    auto manifold = to_set(rep.manifold_pass);
    for (const auto& s : rep.spec.expected_manifold) CHECK(manifold.count({s.p, s.q}) == 1);
    CHECK(manifold.size() > rep.spec.expected_manifold.size());
    // every extra is flagged and the flags cover exactly the non-listed passes
    std::set<std::pair<long, long>> extras = to_set(rep.manifold_extras);
    for (const auto& s : rep.spec.expected_manifold) CHECK(extras.count({s.p, s.q}) == 0);
    CHECK(extras.size() + rep.spec.expected_manifold.size() == manifold.size());
}

TEST_CASE("622 screen agrees with the independent brute-force scan") {
    ScreenReport rep = screen(preset_622());
    auto scan = oracle::brute_force_scan(20, 3, 75832, 10000, 3, {1, 2, 4});
    std::set<std::pair<long, long>> expect;
    for (const auto& s : scan) expect.insert({s.p, s.q});
    std::set<std::pair<long, long>> got = to_set(rep.manifold_pass);
    for (const auto& s : rep.orbifold_pass) got.insert({s.p, s.q});
    CHECK(got == expect);
}

TEST_CASE("zero linking number passes only (1, q)") {
    LinkSpec spec = preset_622();
    spec.linking_number = 0;
    spec.expected_manifold.clear();
    spec.expected_orbifold.clear();
    ScreenReport rep = screen(spec);
    CHECK(!rep.manifold_pass.empty());
    for (const auto& s : rep.manifold_pass) CHECK(s.p == 1);
    CHECK(rep.orbifold_pass.empty());
    for (const auto& e : rep.entries) {
        if (e.pass || e.slope.p == 1) continue;
        CHECK(std::find(e.reasons.begin(), e.reasons.end(), FailReason::ZeroLinkingRule) != e.reasons.end());
    }
}

TEST_CASE("623 screen contains the fifteen published slopes") {
    ScreenReport rep = screen(preset_623());
    auto manifold = to_set(rep.manifold_pass);
    REQUIRE(rep.spec.expected_manifold.size() == 15);
    for (const auto& s : rep.spec.expected_manifold) CHECK(manifold.count({s.p, s.q}) == 1);
    CHECK(rep.orbifold_pass.empty());  // even p always shares a factor with linking number 2
    // extras flagged, and the whole pass set agrees with the brute-force scan
    auto scan = oracle::brute_force_scan(20, 8, 75832, 10000, 2, {1, 2, 4});
    std::set<std::pair<long, long>> expect;
    for (const auto& s : scan) expect.insert({s.p, s.q});
    CHECK(manifold == expect);
    for (const auto& e : rep.entries)
        if (e.pass && !e.in_expected_list) CHECK(e.discrepancy);
}

TEST_CASE("count bound at 7.5832") {
    CountBound cb = count_bound(Rational::parse("75832/10000"));
    CHECK(cb.primitive == 60);
    CHECK(cb.gcd2 == 18);
    CHECK(cb.gcd4 == 6);
    CHECK(cb.total == 84);
    CHECK(cb.verified.size() == 3);
    CHECK_THROWS_AS(count_bound(Rational(7)), UnsupportedBound);
}

TEST_CASE("screen rejects malformed specs") {
    LinkSpec spec = preset_622();
    spec.cusp_shape.im_sq = Rational(0);
    CHECK_THROWS_AS(screen(spec), std::domain_error);
    spec = preset_622();
    spec.gcd_allowed.clear();
    CHECK_THROWS_AS(screen(spec), std::domain_error);
}

TEST_SUITE_END();
