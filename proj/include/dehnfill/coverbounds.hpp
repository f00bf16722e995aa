#pragma once

#include <string>
#include <vector>

#include "dehnfill/surd.hpp"

namespace dehnfill {

enum class IsotropyTag { A4, S4, A5 };
const char* isotropy_name(IsotropyTag t);

struct IsotropyGroup {
    IsotropyTag tag;
    long order;
    std::vector<long> cyclic_orders;
};
// The three non-dihedral vertex isotropy groups with their cyclic subgroup
// orders; dihedral vertices are excluded by the cusp-killing argument.
std::vector<IsotropyGroup> vertex_isotropy_groups();

// One feasible (group, torsion, cover degree) combination.
struct RigidConstraint {
    IsotropyTag group;
    long torsion;  // cyclic isotropy order d = gcd(p, q) on the singular circle
    long degree;   // cover degree, = (number of preimages) * [G : Z_d]
};

// Perturbable inputs of the degree scan: degrees are the multiples of
// `degree_multiple` strictly below `max_degree_exclusive`.
struct RigidScanParams {
    long degree_multiple = 3;       // 3-torsion on the rigid cusp
    long max_degree_exclusive = 12; // volume ratio ceiling
};

// Re-derives the decision table from group data: for each group and each
// cyclic order d > 1, the local degree is [G : Z_d] and the cover degree
// must be one of its multiples inside the feasible set.
std::vector<RigidConstraint> rigid_constraints(const RigidScanParams& params = {});

enum class CuspType { S333, S244, S236 };
const char* cusp_type_name(CuspType t);

// Volume floor per rigid cusp type: minimal manifold-cover degree times the
// orbifold volume lower bound, exactly in the ring Z[1/sqrt(3)] * v0.
struct VolumeFloorEntry {
    CuspType type;
    long min_degree;
    Surd orb_vol_lower;  // in units of v0
    bool strict;         // strict lower bound?
    Surd product;        // min_degree * orb_vol_lower, in units of v0
};
struct VolumeFloor {
    std::vector<VolumeFloorEntry> entries;
    Surd minimum;                       // in units of v0 (exactly 6)
    std::vector<CuspType> attained_by;  // entries whose product equals the minimum
    double minimum_approx;              // using v0 ~ 1.0149416
};
VolumeFloor volume_floor();

}  // namespace dehnfill
