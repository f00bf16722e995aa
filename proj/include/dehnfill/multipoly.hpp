#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dehnfill/bigfloat.hpp"
#include "dehnfill/bigint.hpp"
#include "dehnfill/surd.hpp"

namespace dehnfill {

// Fixed variable universe, ordered w > x > s1 > s2 > t > c for the
// canonical graded-lexicographic term order.
enum class Var : int { W = 0, X = 1, S1 = 2, S2 = 3, T = 4, C = 5 };
inline constexpr int kNumVars = 6;
const char* var_name(Var v);

using Monomial = std::array<int, kNumVars>;

// Graded lex: total degree first, then lexicographically with W most
// significant. Comparator yields ascending order, so map::rbegin() is the
// leading term.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Z in the fixed variable set. Invariant: no zero
// coefficients are ever stored.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, BigInt, GradedLexLess>;

    MultiPoly() = default;
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(BigInt c);
    static MultiPoly variable(Var v);
    static MultiPoly term(BigInt c, const Monomial& m);
    // Dense univariate constructor: coeffs[k] is the coefficient of v^k.
    static MultiPoly from_univariate(Var v, const std::vector<BigInt>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    BigInt constant_term() const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly pow(unsigned long e) const;
    MultiPoly scaled(const BigInt& c) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    int degree(Var v) const;       // -1 for the zero polynomial
    int total_degree() const;      // -1 for the zero polynomial
    bool uses(Var v) const { return degree(v) > 0; }
    // True when every term is a power of v (constants allowed).
    bool univariate_in(Var v) const;
    std::vector<BigInt> univariate_coeffs(Var v) const;

    // Coefficient of v^k, a polynomial in the remaining variables.
    MultiPoly coeff_of(Var v, int k) const;
    MultiPoly leading_coeff(Var v) const { return coeff_of(v, degree(v)); }
    MultiPoly derivative(Var v) const;
    MultiPoly substituted(Var v, const MultiPoly& value) const;
    MultiPoly swapped(Var a, Var b) const;

    // Integer content (gcd of coefficients, non-negative; 0 for zero poly).
    BigInt content() const;
    MultiPoly primitive_part() const;
    // Positive leading coefficient under the canonical order.
    MultiPoly sign_normalized() const;
    int lead_sign() const;

    Surd eval_surd(const std::array<const Surd*, kNumVars>& point) const;
    ComplexF eval_complex(const std::array<const ComplexF*, kNumVars>& point) const;

    // Canonical text form, terms in descending graded-lex order.
    std::string to_string() const;

  private:
    TermMap terms_;
    friend class LaurentPoly;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Laurent polynomial in a single variable over Z.
class LaurentPoly {
  public:
    explicit LaurentPoly(Var v) : var_(v) {}
    // View an ordinary polynomial (univariate in v) as a Laurent polynomial.
    LaurentPoly(Var v, const MultiPoly& p);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, BigInt>& coeffs() const { return coeffs_; }
    long min_exp() const;
    long max_exp() const;

    void add_term(long e, const BigInt& c);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(long k) const;  // multiply by var^k

    std::string to_string() const;

  private:
    Var var_;
    std::map<long, BigInt> coeffs_;
};

}  // namespace dehnfill
