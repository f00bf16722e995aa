#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>

#include "dehnfill/rational.hpp"

namespace dehnfill {

struct MixedRadicand : std::domain_error {
    MixedRadicand() : std::domain_error("Surd: operands live in different quadratic fields") {}
};

// Element a + b*sqrt(d) of a quadratic field Q(sqrt(d)). Canonical form:
// d is a square-free integer (possibly negative), and d == 1 forces b == 0,
// so equality is structural. Square factors of d are extracted at
// construction.
class Surd {
  public:
    Surd() : a_(0), b_(0), d_(1) {}
    Surd(Rational rational_value) : a_(std::move(rational_value)), b_(0), d_(1) {}
    Surd(Rational a, Rational b, BigInt d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend Surd operator+(const Surd& u, const Surd& v);
    friend Surd operator-(const Surd& u, const Surd& v);
    friend Surd operator*(const Surd& u, const Surd& v);
    Surd operator-() const;
    Surd conj() const;
    // Field norm a^2 - b^2 d.
    Rational norm() const;
    Surd inverse() const;
    Surd pow(unsigned long e) const;

    bool operator==(const Surd& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }

    std::string to_string() const;

  private:
    Rational a_, b_;
    BigInt d_;
    static void merge_field(const Surd& u, const Surd& v, BigInt& d_out);
};

std::ostream& operator<<(std::ostream& os, const Surd& v);

// Square-free decomposition |n| = s * m^2 with s square-free; returns (s
// with the sign of n, m). Exact for |n| up to ~1e12 past the trial-division
// bound; beyond that range it throws rather than guess.
struct SquarefreeParts {
    BigInt squarefree;
    BigInt root_of_square;
};
SquarefreeParts squarefree_decompose(const BigInt& n);

// Exact sign of a - b*sqrt(d) for rational a, b >= 0, d >= 0, decided by
// comparing sign(a) and then a^2 against b^2 d. Never touches floating point.
std::strong_ordering cmp_times_sqrt(const Rational& a, const Rational& b, const Rational& d);

}  // namespace dehnfill
