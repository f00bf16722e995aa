#include "dehnfill/bigfloat.hpp"

#include <cmath>
#include <stdexcept>

namespace dehnfill {

namespace {
thread_local long g_prec = 320;
}

long BigFloat::working_precision() { return g_prec; }
void BigFloat::set_working_precision(long bits) {
    if (bits < 64) bits = 64;
    g_prec = bits;
}

void BigFloat::round_() {
    if (mant_.is_zero()) {
        exp_ = 0;
        return;
    }
    long bits = static_cast<long>(mant_.bit_length());
    long excess = bits - g_prec;
    if (excess <= 0) return;
    // round to nearest (half away from zero)
    BigInt half = BigInt(1).shifted(excess - 1);
    BigInt m = mant_.abs() + half;
    m = m.shifted(-excess);
    mant_ = mant_.sign() < 0 ? -m : m;
    exp_ += excess;
}

BigFloat::BigFloat(const Rational& q) {
    if (q.is_zero()) {
        mant_ = BigInt(0);
        exp_ = 0;
        return;
    }
    long shift = g_prec + static_cast<long>(q.den().bit_length()) -
                 static_cast<long>(q.num().abs().bit_length()) + 2;
    if (shift < 0) shift = 0;
    mant_ = q.num().shifted(shift).div_trunc(q.den());
    exp_ = -shift;
    round_();
}

BigFloat BigFloat::from_double(double v) {
    if (v == 0.0) return BigFloat();
    if (!std::isfinite(v)) throw std::domain_error("BigFloat: non-finite double");
    int e = 0;
    double m = std::frexp(v, &e);  // v = m * 2^e, 0.5 <= |m| < 1
    long long mi = static_cast<long long>(std::ldexp(m, 53));
    BigFloat r;
    r.mant_ = BigInt(mi);
    r.exp_ = e - 53;
    r.round_();
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BigFloat r;
    if (a.exp_ >= b.exp_) {
        r.mant_ = a.mant_.shifted(a.exp_ - b.exp_) + b.mant_;
        r.exp_ = b.exp_;
    } else {
        r.mant_ = b.mant_.shifted(b.exp_ - a.exp_) + a.mant_;
        r.exp_ = a.exp_;
    }
    r.round_();
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    r.mant_ = a.mant_ * b.mant_;
    r.exp_ = a.exp_ + b.exp_;
    r.round_();
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
    if (a.is_zero()) return BigFloat();
    BigFloat r;
    long shift = g_prec + static_cast<long>(b.mant_.abs().bit_length()) -
                 static_cast<long>(a.mant_.abs().bit_length()) + 2;
    if (shift < 0) shift = 0;
    r.mant_ = a.mant_.shifted(shift).div_trunc(b.mant_);
    r.exp_ = a.exp_ - b.exp_ - shift;
    r.round_();
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r = *this;
    r.mant_ = -r.mant_;
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r = *this;
    r.mant_ = r.mant_.abs();
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw std::domain_error("BigFloat: sqrt of negative value");
    if (is_zero()) return BigFloat();
    BigFloat r;
    long shift = 2 * g_prec - static_cast<long>(mant_.bit_length());
    if (shift < 0) shift = 0;
    if ((exp_ - shift) & 1) ++shift;  // even exponent so halving is exact
    r.mant_ = mant_.shifted(shift).isqrt();
    r.exp_ = (exp_ - shift) / 2;
    r.round_();
    return r;
}

bool BigFloat::operator==(const BigFloat& o) const { return (*this <=> o) == std::strong_ordering::equal; }

std::strong_ordering BigFloat::operator<=>(const BigFloat& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    // compare mantissas on a common exponent
    long e = exp_ < o.exp_ ? exp_ : o.exp_;
    return mant_.shifted(exp_ - e) <=> o.mant_.shifted(o.exp_ - e);
}

BigFloat BigFloat::ldexp(long k) const {
    BigFloat r = *this;
    r.exp_ += k;
    return r;
}

double BigFloat::to_double() const {
    if (is_zero()) return 0.0;
    long bits = static_cast<long>(mant_.bit_length());
    long drop = bits - 52;
    if (drop < 0) drop = 0;
    double m = mant_.shifted(-drop).to_double();
    return std::ldexp(m, static_cast<int>(exp_ + drop));
}

std::string BigFloat::to_decimal(int digits) const {
    // value * 10^digits, rounded to an integer
    BigInt scaled = mant_ * BigInt(10).pow(static_cast<unsigned long>(digits));
    BigInt q;
    if (exp_ >= 0) {
        q = scaled.shifted(exp_);
    } else {
        BigInt den = BigInt(1).shifted(-exp_);
        q = scaled.div_trunc(den);
        BigInt r2 = (scaled - q * den).abs() * BigInt(2);
        if (r2 >= den) q += BigInt(mant_.sign() >= 0 ? 1 : -1);
    }
    std::string s = q.abs().to_string();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (sign() < 0) s.insert(0, "-");
    return s;
}

long BigFloat::magnitude_exponent() const {
    if (is_zero()) return -g_prec * 4;  // effectively -inf for our uses
    return static_cast<long>(mant_.bit_length()) + exp_;
}

ComplexF operator/(const ComplexF& a, const ComplexF& b) {
    BigFloat n = b.abs2();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

ComplexF ComplexF::sqrt() const {
    if (is_zero()) return {BigFloat(), BigFloat()};
    BigFloat r = abs();
    BigFloat two(2);
    BigFloat u = ((r + re) / two).sqrt();
    BigFloat v = ((r - re) / two).sqrt();
    if (im.sign() < 0) v = -v;
    return {u, v};
}

ComplexF ComplexF::pow(long e) const {
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    ComplexF acc{BigFloat(1), BigFloat(0)};
    ComplexF base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    if (inv) acc = ComplexF{BigFloat(1), BigFloat(0)} / acc;
    return acc;
}

}  // namespace dehnfill
