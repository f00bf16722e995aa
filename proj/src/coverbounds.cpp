#include "dehnfill/coverbounds.hpp"

#include <stdexcept>

namespace dehnfill {

const char* isotropy_name(IsotropyTag t) {
    switch (t) {
        case IsotropyTag::A4: return "A4";
        case IsotropyTag::S4: return "S4";
        case IsotropyTag::A5: return "A5";
    }
    return "?";
}

std::vector<IsotropyGroup> vertex_isotropy_groups() {
    return {
        {IsotropyTag::A4, 12, {1, 2, 3}},
        {IsotropyTag::S4, 24, {1, 2, 3, 4}},
        {IsotropyTag::A5, 60, {1, 2, 3, 5}},
    };
}

std::vector<RigidConstraint> rigid_constraints(const RigidScanParams& params) {
    if (params.degree_multiple < 1 || params.max_degree_exclusive <= params.degree_multiple)
        throw std::domain_error("rigid_constraints: empty degree set");
    std::vector<long> feasible;
    for (long d = params.degree_multiple; d < params.max_degree_exclusive; d += params.degree_multiple)
        feasible.push_back(d);
    std::vector<RigidConstraint> out;
    for (const auto& g : vertex_isotropy_groups()) {
        for (long d : g.cyclic_orders) {
            if (d <= 1) continue;  // the singular circle carries d-torsion, d > 1
            long index = g.order / d;  // local degree at each preimage
            for (long deg : feasible)
                if (deg % index == 0) out.push_back({g.tag, d, deg});
        }
    }
    return out;
}

const char* cusp_type_name(CuspType t) {
    switch (t) {
        case CuspType::S333: return "S2(3,3,3)";
        case CuspType::S244: return "S2(2,4,4)";
        case CuspType::S236: return "S2(2,3,6)";
    }
    return "?";
}

VolumeFloor volume_floor() {
    Rational half(BigInt(1), BigInt(2));
    Rational quarter(BigInt(1), BigInt(4));
    Rational sixth(BigInt(1), BigInt(6));
    VolumeFloor out;
    // manifold-cover degree floors and orbifold volume floors, in v0 units
    out.entries = {
        {CuspType::S333, 12, Surd(half), true, Surd(Rational(6))},
        // v0 / (2 sqrt(3)) = (sqrt(3)/6) v0; 24 * that = 4 sqrt(3) v0
        {CuspType::S244, 24, Surd(Rational(0), sixth, BigInt(3)), false,
         Surd(Rational(0), Rational(4), BigInt(3))},
        {CuspType::S236, 24, Surd(quarter), true, Surd(Rational(6))},
    };
    // re-verify the products
    for (auto& e : out.entries) {
        Surd prod = e.orb_vol_lower * Surd(Rational(e.min_degree));
        if (!(prod == e.product)) throw std::runtime_error("volume_floor: product mismatch");
    }
    // exact minimum over Z[sqrt(3)] * v0: 6 < 4 sqrt(3) iff 36 < 48
    if (!(cmp_times_sqrt(Rational(6), Rational(4), Rational(3)) == std::strong_ordering::less))
        throw std::runtime_error("volume_floor: expected the S2(2,4,4) branch to be strictly larger");
    out.minimum = Surd(Rational(6));
    for (const auto& e : out.entries)
        if (e.product == out.minimum) out.attained_by.push_back(e.type);
    out.minimum_approx = 6.0 * 1.0149416;
    return out;
}

}  // namespace dehnfill
