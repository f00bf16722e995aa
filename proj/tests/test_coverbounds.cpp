#include <doctest.h>

#include <algorithm>

#include "dehnfill/coverbounds.hpp"
#include "dehnfill/slopescreen.hpp"

using namespace dehnfill;

TEST_SUITE_BEGIN("coverbounds");

TEST_CASE("rigid cover table") {
    auto rows = rigid_constraints();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].group == IsotropyTag::A4);
    CHECK(rows[0].torsion == 2);
    CHECK(rows[0].degree == 6);
    CHECK(rows[1].group == IsotropyTag::S4);
    CHECK(rows[1].torsion == 4);
    CHECK(rows[1].degree == 6);
    for (const auto& r : rows) CHECK(r.group != IsotropyTag::A5);
}

TEST_CASE("table re-derives from group data: perturbed inputs change it") {
    RigidScanParams params;
    params.max_degree_exclusive = 13;  // allow degree 12
    auto rows = rigid_constraints(params);
    CHECK(rows.size() > 2);
    bool has_a5 = false, has_deg12 = false;
    for (const auto& r : rows) {
        has_a5 = has_a5 || r.group == IsotropyTag::A5;
        has_deg12 = has_deg12 || r.degree == 12;
    }
    CHECK(has_deg12);
    CHECK(has_a5);  // A5 with d=5 has cyclic index 12
}

TEST_CASE("volume floor") {
    VolumeFloor vf = volume_floor();
    CHECK(vf.minimum == Surd(Rational(6)));
    REQUIRE(vf.attained_by.size() == 2);
    CHECK(vf.attained_by[0] == CuspType::S333);
    CHECK(vf.attained_by[1] == CuspType::S236);
    // the S2(2,4,4) branch is 4 sqrt(3) v0, strictly larger than 6 v0
    const auto& s244 = vf.entries[1];
    CHECK(s244.type == CuspType::S244);
    CHECK(s244.product == Surd(Rational(0), Rational(4), BigInt(3)));
    CHECK(cmp_times_sqrt(Rational(6), Rational(4), Rational(3)) == std::strong_ordering::less);
    CHECK(vf.minimum_approx == doctest::Approx(6.0896496));
}

TEST_CASE("derived torsion set matches the screening default") {
    std::vector<long> expect{1, 2, 4};
    CHECK(default_gcd_allowed() == expect);
}

TEST_SUITE_END();
