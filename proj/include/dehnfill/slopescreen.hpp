#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dehnfill/rational.hpp"

namespace dehnfill {

struct UnsupportedBound : std::domain_error {
    UnsupportedBound() : std::domain_error("count_bound: only the 75832/10000 bound is supported") {}
};

// Filling slope (p, q), canonical orbit representative with p, q >= 0
// under the link's (p, q) ~ (p, -q) involution.
struct Slope {
    long p = 0, q = 0;
    long d() const;  // gcd(p, q)
    bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
    auto operator<=>(const Slope& o) const = default;
};

// Cusp modulus tau = re + i*sqrt(im_sq) of the filled cusp's lattice in the
// standard homological framing (meridian scaled to 1).
struct CuspShape {
    Rational re;
    Rational im_sq;
};

struct LinkSpec {
    std::string name;
    long linking_number = 0;
    Rational volume;  // informational
    CuspShape cusp_shape;
    Rational length_bound;
    std::vector<long> gcd_allowed;
    // published slope lists to confirm against; extras get flagged
    std::vector<Slope> expected_manifold;
    std::vector<Slope> expected_orbifold;
    std::map<std::string, std::string> provenance;
};

// Exact normalized-length squared: the value is num / sqrt(im_sq).
struct NormalizedLengthSq {
    Rational num;
    Rational im_sq;
};
NormalizedLengthSq nl_sq(const Slope& s, const CuspShape& shape);

// NL <= bound, decided exactly as num^2 <= bound^4 * im_sq.
bool passes_length(const Slope& s, const CuspShape& shape, const Rational& bound);

struct LinkingVerdict {
    bool pass = false;
    bool zero_linking_rule = false;  // linking number 0: only p = 1 passes
    long covering_components = 0;    // gcd(p, l) on failure: component count of the covering link
};
LinkingVerdict linking_filter(const Slope& s, long linking_number);

bool gcd_filter(const Slope& s, const std::vector<long>& allowed);

enum class FailReason { LengthExceeded, LinkingGcd, GcdNotAllowed, ZeroLinkingRule };
const char* fail_reason_name(FailReason r);

struct ScreenEntry {
    Slope slope;
    long d = 1;
    NormalizedLengthSq nl;
    bool pass = false;
    std::vector<FailReason> reasons;
    long covering_components = 0;
    bool in_expected_list = false;   // appears in the spec's published list
    bool discrepancy = false;        // passes but missing from the published list
};

struct ScreenReport {
    LinkSpec spec;
    long p_cap = 0, q_cap = 0;       // enumeration box (inclusive)
    std::vector<ScreenEntry> entries;
    std::vector<Slope> manifold_pass;   // d = 1
    std::vector<Slope> orbifold_pass;   // d > 1
    std::vector<Slope> manifold_extras; // flagged discrepancies
    std::vector<Slope> orbifold_extras;
};

// Enumerates every canonical slope inside the exact box implied by the
// length bound and applies the three filters. Requires re >= 0 so the
// normalized length is monotone in p and q.
ScreenReport screen(const LinkSpec& spec);

// Slope-count bound at the 75832/10000 normalized-length bound, with the
// intermediate inequalities re-verified exactly.
struct CountBound {
    long primitive = 60;
    long gcd2 = 18;
    long gcd4 = 6;
    long total = 84;
    std::vector<std::string> verified;  // human-readable re-verified inequalities
};
CountBound count_bound(const Rational& bound);

// Built-in presets (the JSON files under presets/ mirror these).
LinkSpec preset_622();
LinkSpec preset_623();
// Default orbifold torsion set {1} U {torsions of the rigid-cover table}.
std::vector<long> default_gcd_allowed();

}  // namespace dehnfill
