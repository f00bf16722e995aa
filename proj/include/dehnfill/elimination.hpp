#pragma once

#include <stdexcept>
#include <utility>

#include "dehnfill/multipoly.hpp"

namespace dehnfill {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("resultant: zero polynomial input") {}
};

// Exact quotient A/B in the term order; throws if B does not divide A.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly* quotient);

// Pseudo-remainder R with lc(B,var)^(deg A - deg B + 1) * A = Q*B + R.
// A zero result certifies that B divides the lc-scaled A.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Var var);

// Resultant with respect to var, by subresultant polynomial remainder
// sequences (Cohen, Alg. 3.3.7). Exact including sign.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, Var var);

// Gcd of two univariate integer polynomials (primitive PRS), sign-normalized.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, Var var);

// Primitive square-free part in var with positive leading coefficient:
// a / gcd(a, da/dvar), divided by integer content. Univariate inputs only.
MultiPoly squarefree_primitive(const MultiPoly& a, Var var);

// Clears negative exponents and any vanishing low-order terms: returns
// (numerator, shift) with numerator = L * var^shift an ordinary polynomial
// with non-zero constant term, sign-normalized.
std::pair<MultiPoly, long> laurent_numerator(const LaurentPoly& l);

}  // namespace dehnfill
