#include "dehnfill/surd.hpp"

#include <ostream>

namespace dehnfill {

SquarefreeParts squarefreedecompose_impl(const BigInt& n) {
    SquarefreeParts out{BigInt(1), BigInt(1)};
    if (n.is_zero()) return {BigInt(0), BigInt(1)};
    BigInt rest = n.abs();
    BigInt root(1);
    BigInt sf(1);
    auto strip = [&](long p) {
        BigInt bp(p);
        int e = 0;
        while (rest.divisible_by(bp)) {
            rest = rest.div_exact(bp);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) root *= bp;
        if (e % 2) sf *= bp;
    };
    strip(2);
    for (long p = 3; p <= 1000000 && BigInt(p) * BigInt(p) <= rest; p += 2) strip(p);
    if (!rest.is_one()) {
        bool exact = false;
        BigInt r = rest.isqrt(&exact);
        if (exact) {
            root *= r;
        } else if (rest < BigInt(1000000) * BigInt(1000000)) {
            sf *= rest;  // all factors <= 1e6 removed, so rest is prime
        } else {
            throw std::domain_error("squarefree_decompose: radicand beyond supported factoring range");
        }
    }
    if (n.sign() < 0) sf = -sf;
    return {sf, root};
}

SquarefreeParts squarefree_decompose(const BigInt& n) { return squarefreedecompose_impl(n); }

Surd::Surd(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_.is_zero() || d_.is_zero()) {
        b_ = Rational(0);
        d_ = BigInt(1);
        return;
    }
    auto parts = squarefree_decompose(d_);
    d_ = parts.squarefree;
    b_ = b_ * Rational(parts.root_of_square);
    if (d_.is_one()) {
        a_ = a_ + b_;
        b_ = Rational(0);
    }
}

void Surd::merge_field(const Surd& u, const Surd& v, BigInt& d_out) {
    if (u.is_rational())
        d_out = v.d_;
    else if (v.is_rational())
        d_out = u.d_;
    else if (u.d_ == v.d_)
        d_out = u.d_;
    else
        throw MixedRadicand();
}

Surd operator+(const Surd& u, const Surd& v) {
    BigInt d;
    Surd::merge_field(u, v, d);
    return Surd(u.a_ + v.a_, u.b_ + v.b_, d);
}

Surd operator-(const Surd& u, const Surd& v) {
    BigInt d;
    Surd::merge_field(u, v, d);
    return Surd(u.a_ - v.a_, u.b_ - v.b_, d);
}

Surd operator*(const Surd& u, const Surd& v) {
    BigInt d;
    Surd::merge_field(u, v, d);
    Rational rd(d);
    return Surd(u.a_ * v.a_ + u.b_ * v.b_ * rd, u.a_ * v.b_ + u.b_ * v.a_, d);
}

Surd Surd::operator-() const {
    Surd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Surd Surd::conj() const {
    Surd r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational Surd::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

Surd Surd::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("Surd: inverse of zero (or zero-norm element)");
    Surd c = conj();
    return Surd(c.a_ / n, c.b_ / n, d_);
}

Surd Surd::pow(unsigned long e) const {
    Surd acc{Rational(1)};
    Surd base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Surd::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s = a_.to_string() + (b_.sign() >= 0 ? " + " : " - ");
    else if (b_.sign() < 0) s = "-";
    Rational babs = b_.abs();
    if (!babs.is_integer() || !babs.num().is_one()) s += babs.to_string() + "*";
    s += "sqrt(" + d_.to_string() + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Surd& v) { return os << v.to_string(); }

std::strong_ordering cmp_times_sqrt(const Rational& a, const Rational& b, const Rational& d) {
    if (b.sign() < 0 || d.sign() < 0)
        throw std::domain_error("cmp_times_sqrt: b and d must be non-negative");
    if (b.is_zero() || d.is_zero())
        return a.sign() <=> 0;
    if (a.sign() <= 0) return std::strong_ordering::less;
    return a.squared() <=> b.squared() * d;
}

}  // namespace dehnfill
