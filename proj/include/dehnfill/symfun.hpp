#pragma once

#include <stdexcept>

#include "dehnfill/multipoly.hpp"

namespace dehnfill {

struct NotSymmetric : std::domain_error {
    NotSymmetric() : std::domain_error("sym_reduce: polynomial is not symmetric in (w, x)") {}
};

// Homogeneous symmetric polynomial s_d = sum_{j=0}^d w^j x^(d-j), with
// s_{-1} = 0 and s_0 = 1.
MultiPoly s_poly(int d);

// The unique t_d in Z[s1, s2] with phi_star(t_d) = s_d, computed by the
// recurrence t_d = s1*t_{d-1} - s2*t_{d-2}.
MultiPoly t_poly(int d);

// Substitutes s1 -> w + x and s2 -> w*x. Input may use t and c but not w, x.
MultiPoly phi_star(const MultiPoly& a);

// Inverse of phi_star on symmetric polynomials: rewrites a polynomial in
// (w, x) as a polynomial in (s1, s2) by leading-term elimination. Throws
// NotSymmetric if the input is not fixed by the swap w <-> x.
MultiPoly sym_reduce(const MultiPoly& a);

}  // namespace dehnfill
