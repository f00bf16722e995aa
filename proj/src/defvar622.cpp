#include "dehnfill/defvar622.hpp"

#include <algorithm>

#include "dehnfill/symfun.hpp"

namespace dehnfill {

namespace {

MultiPoly var(Var v) { return MultiPoly::variable(v); }
MultiPoly cst(long v) { return MultiPoly::constant(BigInt(v)); }

MultiPoly one_minus(Var v) { return cst(1) - var(v); }

bool reduces_to_zero_mod_P(const MultiPoly& a, const MultiPoly& P) {
    if (a.is_zero()) return true;
    return pseudo_rem(a, P, Var::W).is_zero();
}

}  // namespace

const VarietyRelations& variety_relations() {
    static const VarietyRelations rel = [] {
        VarietyRelations r;
        MultiPoly w = var(Var::W), x = var(Var::X);
        r.P = cst(1) - x * one_minus(Var::X) * w * one_minus(Var::W);
        MultiPoly s1 = var(Var::S1), s2 = var(Var::S2);
        r.f = cst(1) + s1 * s2 - s2 - s2 * s2;
        r.z_num = cst(1);
        r.z_den = one_minus(Var::W);
        r.y = x * w * one_minus(Var::W);

        if (!(phi_star(r.f) == r.P)) throw SelfCheckFailed("phi_star(f) != P");

        // gluing equations under the V0 substitutions, denominators cleared:
        // (1-x)(1-y)(1-z)(1-w) = xw  and  xw = yz
        MultiPoly one_minus_z_num = r.z_den - r.z_num;  // (1-z) = (-w)/(1-w)
        MultiPoly eq1 = one_minus(Var::X) * (cst(1) - r.y) * one_minus_z_num * one_minus(Var::W) -
                        x * w * r.z_den;
        if (!reduces_to_zero_mod_P(eq1, r.P))
            throw SelfCheckFailed("gluing equation (1-x)(1-y)(1-z)(1-w) = xw not divisible by P");
        MultiPoly eq2 = x * w * r.z_den - r.y * r.z_num;
        if (!eq2.is_zero()) throw SelfCheckFailed("gluing equation xw = yz fails identically");
        // completeness: mu(m1) = -w/((1-w)(1-z)) = 1 after substitution
        MultiPoly mu1_num = -w * r.z_den;
        MultiPoly mu1_den = one_minus(Var::W) * one_minus_z_num;
        if (!(mu1_num == mu1_den)) throw SelfCheckFailed("mu(m1) != 1 on V0");
        return r;
    }();
    return rel;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r.div_exact(BigInt(i));
    }
    return r;
}

MultiPoly g_poly(long p, long q) {
    if (p < 0 || q < 0) throw std::domain_error("g_poly: slope coordinates must be non-negative");
    if (p == 0 && q == 0) throw BothZero();
    MultiPoly g;
    if (p <= q) {
        for (long j = 0; j <= p + q; ++j) {
            BigInt c = binomial(p + q, j);
            if (j % 2) c = -c;
            g += s_poly(static_cast<int>(q - p + j - 1)).scaled(c);
        }
    } else {
        MultiPoly wx = var(Var::W) * var(Var::X);
        for (long j = 0; j <= p - q - 1; ++j) {
            BigInt c = binomial(p + q, j);
            if (j % 2) c = -c;  // (-wx)^j
            g += wx.pow(static_cast<unsigned long>(j)) *
                 s_poly(static_cast<int>(p - q - j - 1)).scaled(c);
        }
        MultiPoly wx_pq = wx.pow(static_cast<unsigned long>(p - q));
        for (long j = p - q + 1; j <= p + q; ++j) {
            BigInt c = binomial(p + q, j);
            if (j % 2) c = -c;
            g -= wx_pq * s_poly(static_cast<int>(j + q - p - 1)).scaled(c);
        }
    }
    return g;
}

MultiPoly surgery_numerator(long p, long q) {
    if (p < 0 || q < 0) throw std::domain_error("surgery_numerator: slope coordinates must be non-negative");
    if (p == 0 && q == 0) throw BothZero();
    MultiPoly w = var(Var::W), x = var(Var::X);
    unsigned long sum = static_cast<unsigned long>(p + q);
    if (p <= q) {
        return w.pow(static_cast<unsigned long>(q - p)) * one_minus(Var::W).pow(sum) -
               x.pow(static_cast<unsigned long>(q - p)) * one_minus(Var::X).pow(sum);
    }
    return w.pow(static_cast<unsigned long>(p - q)) * one_minus(Var::X).pow(sum) -
           x.pow(static_cast<unsigned long>(p - q)) * one_minus(Var::W).pow(sum);
}

MultiPoly h_poly(long p, long q) { return sym_reduce(g_poly(p, q)); }

MultiPoly hprime_poly(long p, long q) {
    MultiPoly h = h_poly(p, q);
    // psi: s1 -> s2 + 1 - 1/s2, as a Laurent polynomial in s2
    LaurentPoly base(Var::S2);
    base.add_term(1, BigInt(1));
    base.add_term(0, BigInt(1));
    base.add_term(-1, BigInt(-1));
    int max_a = h.degree(Var::S1);
    std::vector<LaurentPoly> powers;
    LaurentPoly unit(Var::S2);
    unit.add_term(0, BigInt(1));
    powers.push_back(unit);
    for (int a = 1; a <= std::max(0, max_a); ++a) powers.push_back(powers.back() * base);
    LaurentPoly acc(Var::S2);
    for (const auto& [m, c] : h.terms()) {
        int a = m[static_cast<int>(Var::S1)];
        int b = m[static_cast<int>(Var::S2)];
        acc = acc + powers[static_cast<size_t>(a)].shifted(b).scaled(c);
    }
    if (acc.is_zero()) throw ZeroResult("hprime_poly: h vanishes identically under psi");
    // clear denominators only; a genuine s2^k factor stays (its zero s2 = 0
    // is off the curve and harmless downstream)
    long lift = acc.min_exp() < 0 ? -acc.min_exp() : 0;
    LaurentPoly lifted = acc.shifted(lift);
    MultiPoly num;
    for (const auto& [e, c] : lifted.coeffs()) {
        Monomial m{};
        m[static_cast<int>(Var::S2)] = static_cast<int>(e);
        num += MultiPoly::term(c, m);
    }
    return num.primitive_part().sign_normalized();
}

UnitIntegerFlag unit_integer_flag(long p, long q) {
    if (p == 0 && q == 0) throw BothZero();
    UnitIntegerFlag f;
    if (q == 0 || p == 2 * q) return f;  // not applicable
    f.applicable = true;
    auto coeffs = hprime_poly(p, q).univariate_coeffs(Var::S2);
    f.unit = coeffs.front().is_unit() && coeffs.back().is_unit();
    return f;
}

const MultiPoly& degenerate_sigma2_locus() {
    static const MultiPoly locus = [] {
        MultiPoly s2 = var(Var::S2);
        return (s2 * s2 + s2 + cst(1)) * (s2 * s2 - cst(3) * s2 + cst(1));
    }();
    return locus;
}

namespace {

// Removes square-free factors lying on the degenerate locus; returns the
// kept part and accumulates the dropped product.
MultiPoly drop_degenerate(const MultiPoly& sf, Var v, const MultiPoly& locus, MultiPoly* dropped) {
    MultiPoly g = gcd_univariate(sf, locus, v);
    if (g.degree(v) <= 0) {
        *dropped = MultiPoly::constant(BigInt(1));
        return sf;
    }
    *dropped = g;
    return exact_divide(sf, g).primitive_part().sign_normalized();
}

// classify, then strip degenerate factors out of the filtered product and
// the verdict (they are recorded in degenerate_dropped)
FieldReport classify_excluding_degenerate(const MultiPoly& poly, Var v, const MultiPoly& locus) {
    MultiPoly dropped;
    MultiPoly sf = poly.is_constant() ? poly : squarefree_primitive(poly, v);
    MultiPoly kept = sf.is_constant() ? sf : drop_degenerate(sf, v, locus, &dropped);
    FieldReport rep = classify_cusp_field(kept.is_zero() ? MultiPoly::constant(BigInt(1)) : kept, v);
    rep.degenerate_dropped = dropped;
    return rep;
}

}  // namespace

FieldReport sigma2_minpoly(long p, long q) {
    if (p == 0 && q == 0) throw BothZero();
    MultiPoly hp = hprime_poly(p, q);
    MultiPoly sf = squarefree_primitive(hp, Var::S2);
    FieldReport rep = classify_cusp_field(sf, Var::S2);
    // degenerate factors are not filling solutions: pull them out of the
    // candidate product but keep them listed among the factors
    MultiPoly dropped = MultiPoly::constant(BigInt(1));
    MultiPoly filtered = MultiPoly::constant(BigInt(1));
    bool any = false;
    std::vector<BigInt> fields;
    for (const auto& fv : rep.factors) {
        MultiPoly q2;
        bool degen = fv.degree == 2 && try_exact_divide(degenerate_sigma2_locus(), fv.factor, &q2);
        if (degen) {
            dropped = dropped * fv.factor;
            continue;
        }
        if (fv.verdict != Verdict::RealOnly) {
            filtered = filtered * fv.factor;
            any = true;
            if (fv.verdict == Verdict::QuadImag) fields.push_back(fv.disc_squarefree);
        }
    }
    rep.filtered = filtered;
    rep.filtered_empty = !any;
    rep.quad_imag_fields = fields;
    rep.degenerate_dropped = dropped;
    rep.verdict = !any ? Verdict::RealOnly
                       : (!fields.empty() ? Verdict::QuadImag : Verdict::HigherDegree);
    return rep;
}

FieldReport sigma1_minpoly(long p, long q) {
    if (p == 0 && q == 0) throw BothZero();
    FieldReport sig2 = sigma2_minpoly(p, q);
    FieldReport rep;
    rep.var = Var::T;
    rep.degenerate_dropped = sig2.degenerate_dropped;
    rep.residual_checked_bound = sig2.residual_checked_bound;
    rep.poly = MultiPoly::constant(BigInt(1));
    rep.filtered = MultiPoly::constant(BigInt(1));

    // map each s2 family through the elimination against
    // t*s2 - (s2^2 + s2 - 1). The square-free image of an irreducible
    // family is the minimal polynomial of its sigma1 values, so the factor
    // structure on the t side is inherited rather than recomputed.
    MultiPoly s2 = var(Var::S2);
    MultiPoly link = var(Var::T) * s2 - (s2 * s2 + s2 - cst(1));
    MultiPoly q2;
    for (const auto& fam : sig2.factors) {
        if (try_exact_divide(sig2.degenerate_dropped, fam.factor, &q2)) continue;
        if (fam.degree < 1) continue;
        MultiPoly t_raw = resultant(fam.factor, link, Var::S2);
        if (t_raw.is_constant()) continue;  // family was s2 = 0, off the curve
        FactorVerdict fv;
        fv.factor = squarefree_primitive(t_raw, Var::T);
        fv.degree = fv.factor.degree(Var::T);
        fv.is_residual = fam.is_residual;
        if (try_exact_divide(rep.poly, fv.factor, &q2)) continue;  // image collision
        if (fv.degree == 1) {
            fv.real_roots = 1;
            fv.verdict = Verdict::RealOnly;
        } else if (fv.degree == 2 && !fam.is_residual) {
            auto c = fv.factor.univariate_coeffs(Var::T);
            BigInt disc = c[1] * c[1] - BigInt(4) * c[2] * c[0];
            if (disc.sign() > 0) {
                fv.real_roots = 2;
                fv.verdict = Verdict::RealOnly;
            } else {
                fv.real_roots = 0;
                fv.verdict = Verdict::QuadImag;
                fv.disc_squarefree = squarefree_decompose(disc).squarefree;
            }
        } else {
            fv.real_roots = sturm_real_roots(fv.factor, Var::T);
            fv.verdict = fv.real_roots == fv.degree ? Verdict::RealOnly : Verdict::HigherDegree;
            // an unsplit residual image could still hide a quadratic factor;
            // rule that out by the modular screen before trusting the verdict
            if (fam.is_residual && fv.verdict == Verdict::HigherDegree) {
                FactorSplit split = low_degree_factors(fv.factor, Var::T);
                for (const auto& [f2, mult] : split.factors) {
                    if (f2.degree(Var::T) != 2) continue;
                    auto c = f2.univariate_coeffs(Var::T);
                    BigInt disc = c[1] * c[1] - BigInt(4) * c[2] * c[0];
                    if (disc.sign() < 0)
                        throw SelfCheckFailed(
                            "sigma1_minpoly: quadratic cusp-field factor inside an unsplit family");
                }
            }
        }
        rep.poly = rep.poly * fv.factor;
        rep.real_root_count += fv.real_roots;
        if (fv.verdict != Verdict::RealOnly) rep.filtered = rep.filtered * fv.factor;
        if (fv.verdict == Verdict::QuadImag) rep.quad_imag_fields.push_back(fv.disc_squarefree);
        rep.factors.push_back(std::move(fv));
    }
    rep.degree = rep.poly.degree(Var::T);
    rep.filtered_empty = rep.filtered.is_constant();
    if (rep.filtered_empty)
        rep.verdict = Verdict::RealOnly;
    else
        rep.verdict = rep.quad_imag_fields.empty() ? Verdict::HigherDegree : Verdict::QuadImag;
    if (rep.degree <= 0) {
        rep.poly = MultiPoly::constant(BigInt(1));
        rep.filtered = rep.poly;
    }

    // dual-route check: the assembled product must match the square-free
    // part of the resultant over the whole kept polynomial
    MultiPoly kept = MultiPoly::constant(BigInt(1));
    for (const auto& fam : sig2.factors)
        if (fam.degree >= 1 && !try_exact_divide(sig2.degenerate_dropped, fam.factor, &q2))
            kept = kept * fam.factor;
    if (kept.degree(Var::S2) >= 1) {
        MultiPoly whole = resultant(kept, link, Var::S2);
        if (!whole.is_constant()) {
            MultiPoly whole_sf = squarefree_primitive(whole, Var::T);
            if (!(whole_sf == rep.poly.sign_normalized()))
                throw SelfCheckFailed("sigma1_minpoly: per-family images disagree with the full eliminant");
        }
    }
    return rep;
}

FieldReport w_minpoly(long p, long q) {
    if (p == 0 && q == 0) throw BothZero();
    const auto& rel = variety_relations();
    MultiPoly g = g_poly(p, q);
    FieldReport rep;
    rep.var = Var::W;
    auto empty_report = [&rep]() {
        rep.poly = MultiPoly::constant(BigInt(1));
        rep.filtered = rep.poly;
        rep.filtered_empty = true;
        rep.verdict = Verdict::RealOnly;
        return rep;
    };
    if (g.degree(Var::X) <= 0) return empty_report();  // constant g: empty variety

    // shape polynomials of the geometric candidates, one per irreducible
    // sigma2 family, through the curve parametrization
    // w^2 - s1 w + s2 with s1 = (s2^2 + s2 - 1)/s2
    FieldReport sig2 = sigma2_minpoly(p, q);
    if (sig2.filtered_empty) {
        rep = empty_report();
        rep.degenerate_dropped = sig2.degenerate_dropped;
        return rep;
    }
    MultiPoly s2 = var(Var::S2), w = var(Var::W);
    MultiPoly pairing = s2 * w * w - (s2 * s2 + s2 - cst(1)) * w + s2 * s2;

    rep.var = Var::W;
    rep.poly = MultiPoly::constant(BigInt(1));
    rep.filtered = MultiPoly::constant(BigInt(1));
    MultiPoly dedup = MultiPoly::constant(BigInt(1));  // guards against shared factors
    for (const auto& fam : sig2.factors) {
        if (fam.verdict == Verdict::RealOnly) continue;
        MultiPoly q2;
        if (try_exact_divide(sig2.degenerate_dropped, fam.factor, &q2)) continue;
        MultiPoly shape = squarefree_primitive(resultant(fam.factor, pairing, Var::S2), Var::W);
        if (shape.degree(Var::W) <= 0) continue;
        FieldReport famrep = classify_cusp_field(shape, Var::W);
        for (auto& fv : famrep.factors) {
            if (try_exact_divide(dedup, fv.factor, &q2)) continue;  // already recorded
            dedup = dedup * fv.factor;
            rep.poly = rep.poly * fv.factor;
            rep.real_root_count += fv.real_roots;
            if (fv.verdict != Verdict::RealOnly) rep.filtered = rep.filtered * fv.factor;
            if (fv.verdict == Verdict::QuadImag) rep.quad_imag_fields.push_back(fv.disc_squarefree);
            if (famrep.residual_checked_bound < rep.residual_checked_bound)
                rep.residual_checked_bound = famrep.residual_checked_bound;
            rep.factors.push_back(std::move(fv));
        }
    }
    rep.degree = rep.poly.degree(Var::W);
    rep.filtered_empty = rep.filtered.is_constant();
    rep.degenerate_dropped = sig2.degenerate_dropped;
    if (rep.filtered_empty)
        rep.verdict = Verdict::RealOnly;
    else
        rep.verdict = rep.quad_imag_fields.empty() ? Verdict::HigherDegree : Verdict::QuadImag;

    // the direct route Res_x(P, g) carries every solution branch (plus
    // possible lc-vanishing artifacts); the candidate part must divide it
    MultiPoly direct = resultant(rel.P, g, Var::X);
    if (direct.is_zero()) throw SelfCheckFailed("w_minpoly: resultant vanished identically");
    if (!direct.is_constant()) {
        MultiPoly direct_sf = squarefree_primitive(direct, Var::W);
        if (!try_exact_divide(direct_sf, rep.poly, nullptr))
            throw SelfCheckFailed("w_minpoly: sigma2-route shape polynomial does not divide Res_x(P, g)");
    } else if (rep.degree > 0) {
        throw SelfCheckFailed("w_minpoly: candidates exist but Res_x(P, g) is constant");
    }
    if (rep.degree <= 0) {
        Verdict keep = rep.verdict;
        MultiPoly dropped = rep.degenerate_dropped;
        rep = empty_report();
        rep.verdict = keep;
        rep.degenerate_dropped = dropped;
    }
    return rep;
}

std::vector<MuForm> mu_values() {
    const auto& rel = variety_relations();
    MultiPoly w = var(Var::W), x = var(Var::X);
    MultiPoly omw = one_minus(Var::W), omx = one_minus(Var::X);
    std::vector<MuForm> out;
    {
        MuForm m;
        m.name = "mu(m2)";
        m.num = x * omw;
        m.den = w * omx;
        m.alternates.emplace_back(x * x * omw * omw, cst(1));
        m.alternates.emplace_back(cst(1), w * w * omx * omx);
        out.push_back(std::move(m));
    }
    {
        MuForm m;
        m.name = "mu(m2^-1 l2)";
        m.num = w * omw;
        m.den = x * omx;
        m.alternates.emplace_back(w * w * omw * omw, cst(1));
        m.alternates.emplace_back(cst(1), x * x * omx * omx);
        out.push_back(std::move(m));
    }
    {
        MuForm m;
        m.name = "mu(m1)";
        m.num = -w * rel.z_den;
        m.den = one_minus(Var::W) * (rel.z_den - rel.z_num);  // (1-w)(1-z), z substituted
        m.alternates.emplace_back(cst(1), cst(1));
        out.push_back(std::move(m));
    }
    for (const auto& m : out) {
        for (const auto& [fn, fd] : m.alternates) {
            MultiPoly cross = m.num * fd - m.den * fn;
            if (!reduces_to_zero_mod_P(cross, rel.P))
                throw SelfCheckFailed("mu alternate form for " + m.name + " does not reduce to 0 mod P");
        }
    }
    return out;
}

HolonomyTraces holonomy_traces() {
    const auto& rel = variety_relations();
    MultiPoly w = var(Var::W), x = var(Var::X);
    HolonomyTraces h;
    h.a = {{{cst(1), cst(1)}, {cst(0), cst(1)}}};
    MultiPoly e00 = w + w * x + x * x - w * x * x;
    MultiPoly e01 = -w - w * x - x * x * x + w * x * x * x;
    MultiPoly e10 = w + x - w * x;
    MultiPoly e11 = -w - x * x + w * x * x;
    h.e = {{{e00, e01}, {e10, e11}}};
    h.tr_a = h.a[0][0] + h.a[1][1];
    h.tr_e = e00 + e11;
    // tr(ae) with a upper unipotent: e00 + e10 + e11
    h.tr_ae = e00 + e10 + e11;
    h.det_e = e00 * e11 - e01 * e10;
    h.tr_e2 = e00 * e00 + e01 * e10 + e10 * e01 + e11 * e11;  // tr(e*e)

    if (!(h.tr_a == cst(2))) throw SelfCheckFailed("tr(a) != 2");
    if (!(h.tr_e == w * x)) throw SelfCheckFailed("tr(e) != wx");
    if (!(h.tr_ae == w + x)) throw SelfCheckFailed("tr(ae) != w + x");
    if (!reduces_to_zero_mod_P(h.det_e - cst(1), rel.P)) throw SelfCheckFailed("det(e) != 1 mod P");
    MultiPoly target = (w * x) * (w * x) - cst(2);
    if (!reduces_to_zero_mod_P(h.tr_e2 - target, rel.P))
        throw SelfCheckFailed("tr(e^2) != (wx)^2 - 2 mod P");
    return h;
}

namespace {

AxisAnalysis axis_analysis(const MultiPoly& cosine_poly, const MultiPoly& geo_branch,
                           const MultiPoly& other_branch_poly) {
    AxisAnalysis out;
    out.resultant_raw = resultant(cosine_poly, geo_branch, Var::C);
    out.sigma2_poly = squarefree_primitive(out.resultant_raw, Var::S2);
    out.other_branch = squarefree_primitive(resultant(cosine_poly, other_branch_poly, Var::C), Var::S2);
    MultiPoly unioned = out.sigma2_poly * out.other_branch;
    out.report = classify_excluding_degenerate(unioned, Var::S2, degenerate_sigma2_locus());
    out.classification = out.report.verdict;
    out.quad_imag_fields = out.report.quad_imag_fields;
    return out;
}

}  // namespace

AxisAnalysis p0_analysis(long p) {
    if (p < 1) throw std::domain_error("p0_analysis: p must be >= 1");
    MultiPoly cmp = cos_minpoly(p);
    MultiPoly s2 = var(Var::S2), c = var(Var::C);
    MultiPoly geo = s2 * s2 + (c - cst(1)) * s2 + cst(1);
    MultiPoly other = s2 * s2 + (-c - cst(1)) * s2 + cst(1);
    return axis_analysis(cmp, geo, other);
}

AxisAnalysis twoq_analysis(long q) {
    if (q < 1) throw std::domain_error("twoq_analysis: q must be >= 1");
    MultiPoly cmp = cos_minpoly(q);
    MultiPoly s2 = var(Var::S2), c = var(Var::C);
    MultiPoly e = s2.pow(4) - cst(3) * s2.pow(3) + s2 * s2 + cst(2);
    MultiPoly geo = c + e;
    MultiPoly other = e - c;
    return axis_analysis(cmp, geo, other);
}

const char* route_name(SweepRoute r) {
    switch (r) {
        case SweepRoute::P0Family: return "p0";
        case SweepRoute::TwoQFamily: return "2q_q";
        case SweepRoute::General: return "general";
    }
    return "?";
}

SweepResult quad_imag_sweep(long max_sum) {
    if (max_sum < 3) throw std::domain_error("quad_imag_sweep: max_sum must be >= 3");
    SweepResult result;
    for (long sum = 1; sum <= max_sum; ++sum) {
        for (long p = sum; p >= 0; --p) {
            long q = sum - p;
            SweepEntry entry;
            entry.p = p;
            entry.q = q;
            if (q == 0) {
                entry.route = SweepRoute::P0Family;
                AxisAnalysis a = p0_analysis(p);
                entry.classification = a.classification;
                entry.quad_imag_fields = a.quad_imag_fields;
                entry.non_hyperbolic_certificate = a.report.filtered_empty;
                entry.report = a.report;
            } else if (p == 2 * q) {
                entry.route = SweepRoute::TwoQFamily;
                AxisAnalysis a = twoq_analysis(q);
                entry.classification = a.classification;
                entry.quad_imag_fields = a.quad_imag_fields;
                entry.non_hyperbolic_certificate = a.report.filtered_empty;
                entry.report = a.report;
            } else {
                entry.route = SweepRoute::General;
                FieldReport rep = sigma1_minpoly(p, q);
                entry.classification = rep.verdict;
                entry.quad_imag_fields = rep.quad_imag_fields;
                entry.non_hyperbolic_certificate = rep.filtered_empty;
                entry.report = std::move(rep);
            }
            if (entry.classification == Verdict::QuadImag) result.quad_imag_hits.push_back(entry);
            result.entries.push_back(std::move(entry));
        }
    }
    return result;
}

SlopePolyBundle slope_bundle(long p, long q) {
    SlopePolyBundle b;
    b.p = p;
    b.q = q;
    b.g = g_poly(p, q);
    b.h = h_poly(p, q);
    b.hprime = hprime_poly(p, q);
    b.T_sigma1 = sigma1_minpoly(p, q).poly;
    b.T_sigma2 = sigma2_minpoly(p, q).poly;
    if (!(phi_star(b.h) == b.g)) throw SelfCheckFailed("slope_bundle: phi_star(h) != g");
    return b;
}

}  // namespace dehnfill
