#pragma once

// Independent oracles used by the unit and acceptance suites. Everything
// here is deliberately written against different machinery than the code
// under test: determinants by cofactor expansion, slope scans in __int128,
// cosine by Taylor series.

#include <vector>

#include "dehnfill/bigfloat.hpp"
#include "dehnfill/multipoly.hpp"

namespace dehnfill::oracle {

// Resultant via the Sylvester matrix, determinant by cofactor expansion.
// Only suitable for small degrees; that is the point.
MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, Var var);

// Direct double-loop slope scan for a purely imaginary cusp shape with
// integer im_sq: returns all (p,q) with p,q <= cap passing the three
// filters, entirely in __int128 arithmetic (independent of the exact types).
struct ScanSlope {
    long p, q;
};
std::vector<ScanSlope> brute_force_scan(long cap, long im_sq, long bound_num, long bound_den,
                                        long linking, const std::vector<long>& gcd_allowed);

// cos(pi * num / den) to ~`digits` decimal digits by argument-reduction-free
// Taylor summation at the current working precision.
BigFloat cos_pi_times(long num, long den, int digits);

}  // namespace dehnfill::oracle
