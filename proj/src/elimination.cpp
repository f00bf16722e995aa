#include "dehnfill/elimination.hpp"

namespace dehnfill {

bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly* quotient) {
    if (b.is_zero()) return false;
    MultiPoly rem = a;
    MultiPoly q;
    const auto& bt = *b.terms().rbegin();  // leading term of b
    while (!rem.is_zero()) {
        const auto& rt = *rem.terms().rbegin();
        Monomial qm;
        for (int i = 0; i < kNumVars; ++i) {
            qm[i] = rt.first[i] - bt.first[i];
            if (qm[i] < 0) return false;
        }
        if (!rt.second.divisible_by(bt.second)) return false;
        MultiPoly t = MultiPoly::term(rt.second.div_exact(bt.second), qm);
        q += t;
        rem -= t * b;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_exact_divide(a, b, &q)) throw std::domain_error("exact_divide: not divisible");
    return q;
}

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Var var) {
    int db = b.degree(var);
    if (db < 0) throw ZeroPolynomial();
    if (db == 0) return MultiPoly::zero();
    MultiPoly r = a;
    MultiPoly lcb = b.leading_coeff(var);
    int e = a.degree(var) - db + 1;
    if (e < 0) e = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        Monomial shift{};
        shift[static_cast<int>(var)] = dr - db;
        MultiPoly s = r.leading_coeff(var) * MultiPoly::term(BigInt(1), shift);
        r = r * lcb - s * b;
        --e;
    }
    // pad so the multiplier is exactly lc(b)^(deg a - deg b + 1)
    for (; e > 0; --e) r = r * lcb;
    return r;
}

MultiPoly resultant(const MultiPoly& a_in, const MultiPoly& b_in, Var var) {
    if (a_in.is_zero() || b_in.is_zero()) throw ZeroPolynomial();
    MultiPoly a = a_in, b = b_in;
    int da = a.degree(var), db = b.degree(var);
    int s = 1;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if (da % 2 == 1 && db % 2 == 1) s = -s;
    }
    if (db == 0) {
        // Res(a, const) = const^(deg a)
        MultiPoly r = b.pow(static_cast<unsigned long>(da));
        return s < 0 ? -r : r;
    }
    BigInt ca = a.content(), cb = b.content();
    a = a.primitive_part();
    b = b.primitive_part();
    BigInt t = ca.pow(static_cast<unsigned long>(db)) * cb.pow(static_cast<unsigned long>(da));
    MultiPoly g = MultiPoly::constant(BigInt(1));
    MultiPoly h = MultiPoly::constant(BigInt(1));
    while (true) {
        da = a.degree(var);
        db = b.degree(var);
        int delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) s = -s;
        MultiPoly r = pseudo_rem(a, b, var);
        a = std::move(b);
        if (r.is_zero()) return MultiPoly::zero();
        MultiPoly divisor = g * h.pow(static_cast<unsigned long>(delta));
        b = exact_divide(r, divisor);
        g = a.leading_coeff(var);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_divide(g.pow(static_cast<unsigned long>(delta)),
                             h.pow(static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree(var) <= 0) break;
    }
    da = a.degree(var);
    MultiPoly res = b.pow(static_cast<unsigned long>(da));  // b is now a constant in var
    if (da > 1) res = exact_divide(res, h.pow(static_cast<unsigned long>(da - 1)));
    res = res.scaled(t);
    return s < 0 ? -res : res;
}

MultiPoly gcd_univariate(const MultiPoly& a_in, const MultiPoly& b_in, Var var) {
    if (a_in.is_zero()) return b_in.sign_normalized();
    if (b_in.is_zero()) return a_in.sign_normalized();
    if (!a_in.univariate_in(var) || !b_in.univariate_in(var))
        throw std::domain_error("gcd_univariate: inputs must be univariate");
    BigInt c = BigInt::gcd(a_in.content(), b_in.content());
    MultiPoly a = a_in.primitive_part();
    MultiPoly b = b_in.primitive_part();
    if (a.degree(var) < b.degree(var)) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree(var) == 0) return MultiPoly::constant(c);
        MultiPoly r = pseudo_rem(a, b, var);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.scaled(c).sign_normalized();
}

MultiPoly squarefree_primitive(const MultiPoly& a, Var var) {
    if (a.is_zero()) throw std::domain_error("squarefree_primitive: zero polynomial");
    if (!a.univariate_in(var)) throw std::domain_error("squarefree_primitive: input must be univariate");
    if (a.degree(var) == 0) return MultiPoly::constant(BigInt(1));
    MultiPoly g = gcd_univariate(a, a.derivative(var), var);
    MultiPoly sf = g.is_constant() ? a : exact_divide(a, g);
    return sf.primitive_part().sign_normalized();
}

std::pair<MultiPoly, long> laurent_numerator(const LaurentPoly& l) {
    if (l.is_zero()) throw std::domain_error("laurent_numerator: zero input");
    long shift = -l.min_exp();
    MultiPoly p;
    int vi = static_cast<int>(l.var());
    for (const auto& [e, c] : l.coeffs()) {
        Monomial m{};
        m[vi] = static_cast<int>(e + shift);
        p += MultiPoly::term(c, m);
    }
    return {p.sign_normalized(), shift};
}

}  // namespace dehnfill
