#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace dehnfill {

// Arbitrary-precision integer with value semantics. Thin RAII layer over
// GMP's mpz_t; everything the rest of the library needs goes through here
// so no other translation unit touches gmp.h directly.
class BigInt {
  public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Truncated division (C semantics); remainder has the sign of *this.
    BigInt div_trunc(const BigInt& d) const;
    BigInt mod_trunc(const BigInt& d) const;
    // Division known to be exact; asserts in debug builds.
    BigInt div_exact(const BigInt& d) const;
    bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }

    bool operator==(const BigInt& o) const { return mpz_cmp(z_, o.z_) == 0; }
    std::strong_ordering operator<=>(const BigInt& o) const {
        int c = mpz_cmp(z_, o.z_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    bool is_unit() const { return mpz_cmpabs_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }
    BigInt abs() const;
    BigInt pow(unsigned long e) const;
    static BigInt gcd(const BigInt& a, const BigInt& b);
    // Floor of the square root; `exact` reports whether the input was a perfect square.
    BigInt isqrt(bool* exact = nullptr) const;

    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    double to_double() const { return mpz_get_d(z_); }
    // Bit length of |*this| (0 for zero).
    size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
    // *this * 2^k (k may be negative: truncated shift right).
    BigInt shifted(long k) const;

    std::string to_string() const;
    size_t hash() const;

  private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace dehnfill
