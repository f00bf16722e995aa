#pragma once

#include <compare>
#include <string>

#include "dehnfill/rational.hpp"

namespace dehnfill {

// Binary floating point value mant * 2^exp with a configurable working
// precision. Used only for root enclosures and numeric display; every
// logical decision in the library goes through the exact types.
class BigFloat {
  public:
    BigFloat() : mant_(0), exp_(0) {}
    BigFloat(long v) : mant_(v), exp_(0) { round_(); }
    BigFloat(int v) : BigFloat(static_cast<long>(v)) {}
    explicit BigFloat(const Rational& q);
    static BigFloat from_double(double v);

    static long working_precision();     // bits
    static void set_working_precision(long bits);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat abs() const;
    BigFloat sqrt() const;  // floor-style; relative error within working precision

    bool is_zero() const { return mant_.is_zero(); }
    int sign() const { return mant_.sign(); }
    bool operator==(const BigFloat& o) const;
    std::strong_ordering operator<=>(const BigFloat& o) const;

    // 2^k scaling, exact.
    BigFloat ldexp(long k) const;
    double to_double() const;
    std::string to_decimal(int digits) const;

    // Smallest power of two bounding |*this| from above: |x| <= 2^result.
    long magnitude_exponent() const;

  private:
    BigInt mant_;
    long exp_;
    void round_();
};

struct ComplexF {
    BigFloat re, im;

    friend ComplexF operator+(const ComplexF& a, const ComplexF& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexF operator-(const ComplexF& a, const ComplexF& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexF operator*(const ComplexF& a, const ComplexF& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexF operator/(const ComplexF& a, const ComplexF& b);
    ComplexF operator-() const { return {-re, -im}; }
    BigFloat abs2() const { return re * re + im * im; }
    BigFloat abs() const { return abs2().sqrt(); }
    ComplexF sqrt() const;
    ComplexF pow(long e) const;  // integer exponent, negative allowed
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace dehnfill
