#pragma once

#include <stdexcept>
#include <vector>

#include "dehnfill/elimination.hpp"
#include "dehnfill/multipoly.hpp"

namespace dehnfill {

struct NotSquareFree : std::domain_error {
    NotSquareFree() : std::domain_error("polynomial is not square-free") {}
};
struct PrecisionExhausted : std::runtime_error {
    PrecisionExhausted() : std::runtime_error("approx_roots: could not certify enclosures") {}
};

enum class Verdict { RealOnly, QuadImag, HigherDegree };
const char* verdict_name(Verdict v);

struct FactorVerdict {
    MultiPoly factor;        // irreducible of degree <= 2, or the unfactored residual
    int multiplicity = 1;    // in the original (pre-square-free) input
    int degree = 0;
    int real_roots = 0;      // distinct
    bool is_residual = false;  // no factor of degree <= residual_checked_bound found
    Verdict verdict = Verdict::RealOnly;
    BigInt disc_squarefree;  // square-free part of the discriminant (QuadImag factors)
};

struct RootEnclosure {
    BigFloat re, im, rad;    // |root - (re + i*im)| <= rad
    bool certified_nonreal = false;
};

// Diagnostics of a univariate integer polynomial viewed as a field-defining
// equation. `verdict` is QuadImag as soon as one non-real quadratic factor
// exists; per-factor verdicts keep the mixed cases honest.
struct FieldReport {
    Var var = Var::T;
    MultiPoly poly;                  // square-free primitive part under study
    int degree = 0;
    std::vector<FactorVerdict> factors;
    int real_root_count = 0;         // distinct real roots of `poly`
    Verdict verdict = Verdict::RealOnly;
    std::vector<BigInt> quad_imag_fields;  // square-free d < 0, one per QuadImag factor
    MultiPoly filtered;              // product of the factors with non-real roots
    bool filtered_empty = true;
    MultiPoly degenerate_dropped;    // factors removed upstream (complete/real locus)
    int residual_checked_bound = 2;  // factor degrees exhaustively excluded from residuals
    std::vector<RootEnclosure> roots;  // optional; reporting only
};

// Number of distinct real roots, by Sturm sequences over Q. Exact.
// The input must be square-free (throws NotSquareFree otherwise).
int sturm_real_roots(const MultiPoly& t, Var var);

// All integer polynomial factors of degree 1 and 2, with multiplicity,
// plus the unfactored residual. Exhaustive for degrees <= 2; for residuals
// of degree 6..9 a degree-3 candidate sweep is run as well. Every factor is
// verified by exact division.
struct FactorSplit {
    BigInt content;
    std::vector<std::pair<MultiPoly, int>> factors;  // (irreducible factor, multiplicity)
    MultiPoly residual;                              // 1 when fully split
    int residual_checked_bound = 1;  // raised as each exhaustive stage completes
};
FactorSplit low_degree_factors(const MultiPoly& t, Var var);

FieldReport classify_cusp_field(const MultiPoly& t, Var var);

// Minimal polynomial of 2*cos(pi/n) over Q, in the variable c. Degree
// phi(2n)/2 for n >= 2; c+2 for n = 1.
MultiPoly cos_minpoly(long n);

// Cyclotomic polynomial Phi_m in the given variable.
MultiPoly cyclotomic(long m, Var v);
long euler_phi(long n);

// Exact evaluation of t at the 8 unit roots {±1, ±i, ±z6, ±z6^2} that
// generate the unit groups of Q(i) and Q(sqrt(-3)); returns the zeros found.
std::vector<Surd> unit_roots_in_quad_fields(const MultiPoly& t, Var var);

// Certified enclosures of all complex roots (square-free input), to the
// requested number of decimal digits. Discs are pairwise disjoint, so each
// contains exactly one root. Display only; never used for logical decisions.
std::vector<RootEnclosure> approx_roots(const MultiPoly& t, Var var, int digits);

}  // namespace dehnfill
