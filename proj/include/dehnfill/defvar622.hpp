#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "dehnfill/fieldcheck.hpp"
#include "dehnfill/multipoly.hpp"

namespace dehnfill {

struct BothZero : std::domain_error {
    BothZero() : std::domain_error("(0,0) is not a filling slope") {}
};
struct SelfCheckFailed : std::runtime_error {
    explicit SelfCheckFailed(const std::string& what) : std::runtime_error("self-check failed: " + what) {}
};
struct ZeroResult : std::runtime_error {
    explicit ZeroResult(const std::string& what) : std::runtime_error(what) {}
};

// Defining polynomials of the deformation variety of the two-bridge link
// complement under study, restricted to the locus where the first cusp
// stays complete: P in (w,x), its symmetric form f in (s1,s2), and the
// substitutions z = 1/(1-w), y = x w (1-w) recovering the remaining edge
// parameters. Construction self-verifies the defining identities.
struct VarietyRelations {
    MultiPoly P;
    MultiPoly f;
    MultiPoly z_num, z_den;
    MultiPoly y;
};
const VarietyRelations& variety_relations();

BigInt binomial(long n, long k);

// Symmetric surgery polynomial for the (p,q)-filling of the second cusp,
// p, q >= 0 not both zero.
MultiPoly g_poly(long p, long q);
// Direct binomial expansion of the surgery-equation numerator; equals
// (w - x) * g_poly(p, q) identically. Kept as an independent route.
MultiPoly surgery_numerator(long p, long q);
// The (s1, s2)-form: phi_star(h_poly) = g_poly.
MultiPoly h_poly(long p, long q);
// Numerator of h under the curve parametrization s1 = s2 + 1 - 1/s2,
// content- and sign-normalized; univariate in s2.
MultiPoly hprime_poly(long p, long q);

// Unit-algebraic-integer test on hprime's end coefficients. Not applicable
// when q = 0 or p = 2q.
struct UnitIntegerFlag {
    bool applicable = false;
    bool unit = false;
};
UnitIntegerFlag unit_integer_flag(long p, long q);

// s2-locus of the w = x points of the curve f = 0: the complete structure
// and the two real points. Solutions on it never witness a filling, so the
// classification pipeline drops these factors (recorded, never silent).
const MultiPoly& degenerate_sigma2_locus();

FieldReport sigma2_minpoly(long p, long q);
// Cusp-parameter polynomial in t (t represents s1 = w + x), by resultant
// elimination of s2; factors with only real roots are filtered out, which
// makes an empty result a non-hyperbolicity certificate.
FieldReport sigma1_minpoly(long p, long q);
// Shape polynomial of the induced degree-one triangulation: Res_x(P, g).
FieldReport w_minpoly(long p, long q);

struct MuForm {
    std::string name;
    MultiPoly num, den;
    // alternate forms as (num, den) pairs, each equal to num/den on the curve
    std::vector<std::pair<MultiPoly, MultiPoly>> alternates;
};
// Holonomy derivatives of the second-cusp basis curves; alternates are
// verified by cross-multiplied reduction to zero mod P.
std::vector<MuForm> mu_values();

using Mat2 = std::array<std::array<MultiPoly, 2>, 2>;
struct HolonomyTraces {
    Mat2 a, e;
    MultiPoly tr_a, tr_e, tr_ae, tr_e2, det_e;
};
// Face-pairing matrices and their trace identities; throws SelfCheckFailed
// if any identity fails to reduce mod P.
HolonomyTraces holonomy_traces();

// Analysis of the (p,0) and (2q,q) slope families through the cosine
// parametrizations. Both square roots of the holonomy eigenvalue are kept;
// the reported sigma2_poly is the geometric-convention branch and the
// classification runs over the union.
struct AxisAnalysis {
    MultiPoly resultant_raw;   // geometric branch, before normalization
    MultiPoly sigma2_poly;     // its square-free primitive part
    MultiPoly other_branch;    // square-free primitive, other square root
    FieldReport report;        // classification over the union of branches
    Verdict classification = Verdict::RealOnly;
    std::vector<BigInt> quad_imag_fields;
};
AxisAnalysis p0_analysis(long p);
AxisAnalysis twoq_analysis(long q);

enum class SweepRoute { P0Family, TwoQFamily, General };
const char* route_name(SweepRoute r);

struct SweepEntry {
    long p = 0, q = 0;
    SweepRoute route = SweepRoute::General;
    Verdict classification = Verdict::RealOnly;
    std::vector<BigInt> quad_imag_fields;
    bool non_hyperbolic_certificate = false;  // every candidate solution is real
    FieldReport report;
};
struct SweepResult {
    std::vector<SweepEntry> entries;        // full audit trail
    std::vector<SweepEntry> quad_imag_hits;
};
// Classifies every slope with p + q <= max_sum (p, q >= 0, not both zero):
// q = 0 through p0_analysis, p = 2q through twoq_analysis, the rest through
// the cusp-parameter elimination.
SweepResult quad_imag_sweep(long max_sum);

// All per-slope polynomials in one bundle (CLI support).
struct SlopePolyBundle {
    long p = 0, q = 0;
    MultiPoly g, h, hprime;
    MultiPoly T_sigma1, T_sigma2;
};
SlopePolyBundle slope_bundle(long p, long q);

}  // namespace dehnfill
