#include "dehnfill/bigint.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace dehnfill {

BigInt::BigInt(long long v) {
    static_assert(sizeof(long long) == 8);
    if (v >= 0) {
        mpz_init_set_ui(z_, static_cast<unsigned long long>(v) & 0xffffffffu);
        mpz_t hi;
        mpz_init_set_ui(hi, static_cast<unsigned long long>(v) >> 32);
        mpz_mul_2exp(hi, hi, 32);
        mpz_add(z_, z_, hi);
        mpz_clear(hi);
    } else {
        mpz_init(z_);
        BigInt tmp(-(v + 1));  // avoids overflow at LLONG_MIN
        mpz_add_ui(tmp.z_, tmp.z_, 1);
        mpz_neg(z_, tmp.z_);
    }
}

BigInt::BigInt(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("BigInt: bad decimal literal '" + decimal + "'");
    }
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
}

BigInt BigInt::div_trunc(const BigInt& d) const {
    if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    mpz_tdiv_q(r.z_, z_, d.z_);
    return r;
}

BigInt BigInt::mod_trunc(const BigInt& d) const {
    if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    mpz_tdiv_r(r.z_, z_, d.z_);
    return r;
}

BigInt BigInt::div_exact(const BigInt& d) const {
    if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
    assert(mpz_divisible_p(z_, d.z_));
    BigInt r;
    mpz_divexact(r.z_, z_, d.z_);
    return r;
}

BigInt BigInt::abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
}

BigInt BigInt::pow(unsigned long e) const {
    BigInt r;
    mpz_pow_ui(r.z_, z_, e);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::isqrt(bool* exact) const {
    if (sign() < 0) throw std::domain_error("BigInt: isqrt of negative value");
    BigInt r;
    if (exact) {
        mpz_t rem;
        mpz_init(rem);
        mpz_sqrtrem(r.z_, rem, z_);
        *exact = mpz_sgn(rem) == 0;
        mpz_clear(rem);
    } else {
        mpz_sqrt(r.z_, z_);
    }
    return r;
}

BigInt BigInt::shifted(long k) const {
    BigInt r;
    if (k >= 0)
        mpz_mul_2exp(r.z_, z_, static_cast<unsigned long>(k));
    else
        mpz_tdiv_q_2exp(r.z_, z_, static_cast<unsigned long>(-k));
    return r;
}

std::string BigInt::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

size_t BigInt::hash() const {
    // cheap fold of the low limbs; collisions only cost time
    size_t h = static_cast<size_t>(mpz_sgn(z_)) + 0x9e3779b97f4a7c15ull;
    size_t n = mpz_size(z_);
    for (size_t i = 0; i < n && i < 4; ++i)
        h = h * 1099511628211ull + static_cast<size_t>(mpz_getlimbn(z_, i));
    return h;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace dehnfill
