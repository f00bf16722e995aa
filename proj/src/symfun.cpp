#include "dehnfill/symfun.hpp"

namespace dehnfill {

MultiPoly s_poly(int d) {
    if (d < -1) throw std::domain_error("s_poly: index below -1");
    MultiPoly p;
    for (int j = 0; d >= 0 && j <= d; ++j) {
        Monomial m{};
        m[static_cast<int>(Var::W)] = j;
        m[static_cast<int>(Var::X)] = d - j;
        p += MultiPoly::term(BigInt(1), m);
    }
    return p;
}

MultiPoly t_poly(int d) {
    if (d < -1) throw std::domain_error("t_poly: index below -1");
    MultiPoly prev = MultiPoly::zero();                  // t_{-1}
    MultiPoly cur = MultiPoly::constant(BigInt(1));      // t_0
    if (d == -1) return prev;
    MultiPoly s1 = MultiPoly::variable(Var::S1);
    MultiPoly s2 = MultiPoly::variable(Var::S2);
    for (int k = 1; k <= d; ++k) {
        MultiPoly next = s1 * cur - s2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MultiPoly phi_star(const MultiPoly& a) {
    if (a.degree(Var::W) > 0 || a.degree(Var::X) > 0)
        throw std::domain_error("phi_star: input already uses w or x");
    MultiPoly wx_sum = MultiPoly::variable(Var::W) + MultiPoly::variable(Var::X);
    MultiPoly wx_prod = MultiPoly::variable(Var::W) * MultiPoly::variable(Var::X);
    return a.substituted(Var::S1, wx_sum).substituted(Var::S2, wx_prod);
}

MultiPoly sym_reduce(const MultiPoly& a) {
    if (a.degree(Var::S1) > 0 || a.degree(Var::S2) > 0)
        throw std::domain_error("sym_reduce: input already uses s1 or s2");
    if (!(a.swapped(Var::W, Var::X) == a)) throw NotSymmetric();
    const int iw = static_cast<int>(Var::W);
    const int ix = static_cast<int>(Var::X);
    MultiPoly rem = a;
    MultiPoly out;
    MultiPoly wx_sum = MultiPoly::variable(Var::W) + MultiPoly::variable(Var::X);
    MultiPoly wx_prod = MultiPoly::variable(Var::W) * MultiPoly::variable(Var::X);
    while (!rem.is_zero()) {
        // leading term by (w,x)-graded lex; ties in the other variables are
        // irrelevant for termination
        auto best = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
            const auto &m = it->first, &bm = best->first;
            int dm = m[iw] + m[ix], dbm = bm[iw] + bm[ix];
            if (dm > dbm || (dm == dbm && m[iw] > bm[iw])) best = it;
        }
        const Monomial& m = best->first;
        int aexp = m[iw], bexp = m[ix];
        if (aexp < bexp) throw NotSymmetric();  // cannot happen for symmetric input
        Monomial rest = m;
        rest[iw] = rest[ix] = 0;
        Monomial target = rest;
        target[static_cast<int>(Var::S1)] = aexp - bexp;
        target[static_cast<int>(Var::S2)] = bexp;
        MultiPoly piece = MultiPoly::term(best->second, target);
        out += piece;
        rem -= MultiPoly::term(best->second, rest) *
               wx_sum.pow(static_cast<unsigned long>(aexp - bexp)) *
               wx_prod.pow(static_cast<unsigned long>(bexp));
    }
    return out;
}

}  // namespace dehnfill
