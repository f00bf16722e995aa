#include "dehnfill/multipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace dehnfill {

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"w", "x", "σ1", "σ2", "t", "c"};
    return names[static_cast<int>(v)];
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (int i = 0; i < kNumVars; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly MultiPoly::constant(BigInt c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    Monomial m{};
    m[static_cast<int>(v)] = 1;
    return term(BigInt(1), m);
}

MultiPoly MultiPoly::term(BigInt c, const Monomial& m) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

MultiPoly MultiPoly::from_univariate(Var v, const std::vector<BigInt>& coeffs) {
    MultiPoly p;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Monomial m{};
        m[static_cast<int>(v)] = static_cast<int>(k);
        p.terms_.emplace(m, coeffs[k]);
    }
    return p;
}

BigInt MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r += b;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r -= b;
    return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly acc = constant(BigInt(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_)
        if (m[i] > d) d = m[i];
    return terms_.empty() ? -1 : d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = terms_.rbegin()->first;
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) d += m[i];
    return d;
}

bool MultiPoly::univariate_in(Var v) const {
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (i != vi && m[i] != 0) return false;
    return true;
}

std::vector<BigInt> MultiPoly::univariate_coeffs(Var v) const {
    if (!univariate_in(v)) throw std::domain_error("MultiPoly: not univariate in " + std::string(var_name(v)));
    std::vector<BigInt> out(static_cast<size_t>(std::max(0, degree(v)) + 1), BigInt(0));
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) out[static_cast<size_t>(m[vi])] = c;
    return out;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
    MultiPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        if (m[vi] != k) continue;
        Monomial m2 = m;
        m2[vi] = 0;
        r.terms_.emplace(m2, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        if (m[vi] == 0) continue;
        Monomial m2 = m;
        m2[vi] -= 1;
        r.terms_.emplace(m2, c * BigInt(m[vi]));
    }
    return r;
}

MultiPoly MultiPoly::substituted(Var v, const MultiPoly& value) const {
    int vi = static_cast<int>(v);
    // cache powers of the substituted value
    std::vector<MultiPoly> powers{MultiPoly::constant(BigInt(1))};
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        int e = m[vi];
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        Monomial m2 = m;
        m2[vi] = 0;
        r += MultiPoly::term(c, m2) * powers[static_cast<size_t>(e)];
    }
    return r;
}

MultiPoly MultiPoly::swapped(Var a, Var b) const {
    MultiPoly r;
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        std::swap(m2[ia], m2[ib]);
        r.terms_.emplace(m2, c);
    }
    return r;
}

BigInt MultiPoly::content() const {
    BigInt g(0);
    for (const auto& [m, c] : terms_) {
        g = BigInt::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    BigInt g = content();
    if (g.is_zero() || g.is_one()) return *this;
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.div_exact(g));
    return r;
}

int MultiPoly::lead_sign() const { return terms_.empty() ? 0 : terms_.rbegin()->second.sign(); }

MultiPoly MultiPoly::sign_normalized() const { return lead_sign() < 0 ? -*this : *this; }

Surd MultiPoly::eval_surd(const std::array<const Surd*, kNumVars>& point) const {
    Surd acc{Rational(0)};
    for (const auto& [m, c] : terms_) {
        Surd t{Rational(c)};
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (!point[i])
                throw std::domain_error("eval_surd: unassigned variable " + std::string(var_name(Var(i))));
            t = t * point[i]->pow(static_cast<unsigned long>(m[i]));
        }
        acc = acc + t;
    }
    return acc;
}

ComplexF MultiPoly::eval_complex(const std::array<const ComplexF*, kNumVars>& point) const {
    ComplexF acc{BigFloat(0), BigFloat(0)};
    for (const auto& [m, c] : terms_) {
        ComplexF t{BigFloat(Rational(c)), BigFloat(0)};
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (!point[i])
                throw std::domain_error("eval_complex: unassigned variable " + std::string(var_name(Var(i))));
            t = t * point[i]->pow(m[i]);
        }
        acc = acc + t;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool has_vars = false;
        for (int i = 0; i < kNumVars; ++i) has_vars = has_vars || m[i] > 0;
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(Var(i));
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (!has_vars) {
            out += a.to_string();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.to_string() + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

LaurentPoly::LaurentPoly(Var v, const MultiPoly& p) : var_(v) {
    auto coeffs = p.univariate_coeffs(v);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) coeffs_.emplace(static_cast<long>(k), coeffs[k]);
}

long LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("LaurentPoly: empty");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("LaurentPoly: empty");
    return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(long e, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_ != b.var_) throw std::domain_error("LaurentPoly: variable mismatch");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_ != b.var_) throw std::domain_error("LaurentPoly: variable mismatch");
    LaurentPoly r(a.var_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r(var_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : coeffs_) r.coeffs_.emplace(e, coef * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r(var_);
    for (const auto& [e, coef] : coeffs_) r.coeffs_.emplace(e + k, coef);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        BigInt a = c.abs();
        if (e == 0) {
            out += a.to_string();
        } else {
            if (!a.is_one()) out += a.to_string() + "*";
            out += var_name(var_);
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace dehnfill
