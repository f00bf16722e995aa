#include "dehnfill/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dehnfill {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    if (num_.is_zero()) den_ = BigInt(1);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_decimal(int digits) const {
    BigInt scale = BigInt(10).pow(static_cast<unsigned long>(digits));
    BigInt scaled = num_ * scale;
    BigInt q = scaled.div_trunc(den_);
    // round half away from zero
    BigInt r2 = (scaled - q * den_).abs() * BigInt(2);
    if (r2 >= den_.abs()) q += BigInt(num_.sign() >= 0 ? 1 : -1);
    std::string s = q.abs().to_string();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (sign() < 0 && !q.is_zero()) s.insert(0, "-");
    return s;
}

std::string Rational::to_string() const {
    return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace dehnfill
