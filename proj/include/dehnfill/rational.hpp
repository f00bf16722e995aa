#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "dehnfill/bigint.hpp"

namespace dehnfill {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    // Accepts "n", "-n", "n/d".
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational squared() const { return *this * *this; }
    Rational pow(unsigned long e) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    double to_double() const;
    // Rounded decimal expansion with the given number of fractional digits.
    std::string to_decimal(int digits) const;
    std::string to_string() const;  // "n" or "n/d"

  private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace dehnfill
