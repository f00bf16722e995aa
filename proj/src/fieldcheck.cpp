#include "dehnfill/fieldcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace dehnfill {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::RealOnly: return "RealOnly";
        case Verdict::QuadImag: return "QuadImag";
        case Verdict::HigherDegree: return "HigherDegree";
    }
    return "?";
}

namespace {

using QPoly = std::vector<Rational>;  // coefficient of x^k at index k

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

void qtrim(QPoly& p) { p.resize(static_cast<size_t>(qdeg(p) + 1)); }

QPoly qderiv(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    return d;
}

// remainder of a by b over Q
QPoly qrem(QPoly a, const QPoly& b) {
    int db = qdeg(b);
    Rational lcb = b[static_cast<size_t>(db)];
    while (qdeg(a) >= db) {
        int da = qdeg(a);
        Rational f = a[static_cast<size_t>(da)] / lcb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] = a[static_cast<size_t>(da - db + i)] - f * b[static_cast<size_t>(i)];
        qtrim(a);
        if (a.empty()) break;
    }
    return a;
}

int sign_at_infinity(const QPoly& p, bool positive) {
    int d = qdeg(p);
    if (d < 0) return 0;
    int s = p[static_cast<size_t>(d)].sign();
    if (!positive && d % 2 == 1) s = -s;
    return s;
}

int count_sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f);
    QPoly d = qderiv(f);
    if (qdeg(d) >= 0) chain.push_back(d);
    while (chain.size() >= 2) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        if (qdeg(r) < 0) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

QPoly to_qpoly(const MultiPoly& t, Var var) {
    auto coeffs = t.univariate_coeffs(var);
    QPoly p;
    for (const auto& c : coeffs) p.emplace_back(c);
    qtrim(p);
    return p;
}

// ---- integer factorization / divisor enumeration (small scale) ----

std::vector<std::pair<BigInt, int>> factorize(const BigInt& n_in) {
    BigInt n = n_in.abs();
    std::vector<std::pair<BigInt, int>> out;
    if (n.is_zero() || n.is_one()) return out;
    // native fast path once (part of) the value fits a machine word
    static const std::vector<long>& primes = [] {
        static std::vector<long> ps;
        std::vector<bool> sieve(1000001, true);
        for (long i = 2; i <= 1000000; ++i) {
            if (!sieve[static_cast<size_t>(i)]) continue;
            ps.push_back(i);
            for (long j = i * i; j <= 1000000; j += i) sieve[static_cast<size_t>(j)] = false;
        }
        return ps;
    }();
    for (size_t i = 0; i < primes.size(); ++i) {
        if (n.fits_slong()) {
            long v = n.to_long();
            for (size_t j = i; j < primes.size(); ++j) {
                long pp = primes[j];
                if (pp > v / pp) break;
                int e = 0;
                while (v % pp == 0) {
                    v /= pp;
                    ++e;
                }
                if (e) out.emplace_back(BigInt(pp), e);
            }
            if (v > 1) {
                // all prime factors <= 1e6 are gone: v is prime, p^2, or out of range
                long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
                while (r > 1 && r * r > v) --r;
                while ((r + 1) * (r + 1) <= v) ++r;
                if (r * r == v && r > 1000000)
                    out.emplace_back(BigInt(r), 2);
                else if (v <= 1000000000000L)
                    out.emplace_back(BigInt(v), 1);
                else
                    throw std::domain_error("low_degree_factors: coefficient beyond supported factoring range");
            }
            return out;
        }
        BigInt bp(primes[i]);
        if (bp * bp > n) break;
        int e = 0;
        while (n.divisible_by(bp)) {
            n = n.div_exact(bp);
            ++e;
        }
        if (e) out.emplace_back(bp, e);
    }
    if (!n.is_one()) {
        bool exact = false;
        BigInt r = n.isqrt(&exact);
        if (exact)
            out.emplace_back(r, 2);
        else if (n < BigInt(1000000) * BigInt(1000000))
            out.emplace_back(n, 1);
        else
            throw std::domain_error("low_degree_factors: coefficient beyond supported factoring range");
    }
    return out;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factorize(n)) {
        size_t base = divs.size();
        BigInt pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 20000) throw std::domain_error("low_degree_factors: divisor set too large");
    }
    return divs;
}

BigInt eval_at_int(const std::vector<BigInt>& coeffs, long x) {
    BigInt acc(0), bx(x);
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * bx + coeffs[static_cast<size_t>(i)];
    return acc;
}

// ---- factor-pattern screening modulo machine-word primes ----
//
// A degree-k integer factor of T reduces mod p (p not dividing lc T) to a
// degree-k divisor of T mod p, whose irreducible parts all divide
// x^(p^2) - x when k <= 2. So if T mod p has no irreducible factors of
// degree <= 2, no integer factor of degree <= 2 exists.
namespace modp {

using u64 = unsigned long long;
using Poly = std::vector<u64>;  // ascending coefficients, trimmed

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<__uint128_t>(a) * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const std::vector<BigInt>& coeffs, u64 p) {
    Poly out;
    BigInt bp(static_cast<long long>(p));
    for (const auto& c : coeffs) {
        BigInt r = c.mod_trunc(bp);
        long v = r.to_long();
        if (v < 0) v += static_cast<long>(p);
        out.push_back(static_cast<u64>(v));
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulm(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& b, u64 p) {
    u64 inv = powm(b.back(), p - 2, p);
    while (deg(a) >= deg(b)) {
        u64 f = mulm(a.back(), inv, p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = (a[off + i] + p - mulm(f, b[i], p)) % p;
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// raise an already-reduced polynomial to the p-th power mod t
Poly frobenius_step(const Poly& base_in, const Poly& t, u64 p) {
    Poly base = base_in;
    Poly r{1};
    u64 e = p;
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), t, p);
        base = rem(mul(base, base, p), t, p);
        e >>= 1;
    }
    return r;
}

// possible[k] = "an integer factor of degree exactly k might exist".
// A degree-k integer factor of a square-free t reduces mod p to a product
// of irreducible factors of t mod p with degrees summing to k, so the
// distinct-degree factor counts of t mod p rule degrees out by subset sum.
struct ScreenResult {
    std::array<bool, 6> possible{true, true, true, true, true, true};
};

Poly divexact(const Poly& a, const Poly& b, u64 p) {
    Poly r = a, q(a.size() - b.size() + 1, 0);
    u64 inv = powm(b.back(), p - 2, p);
    while (deg(r) >= deg(b)) {
        u64 f = mulm(r.back(), inv, p);
        size_t off = r.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) r[off + i] = (r[off + i] + p - mulm(f, b[i], p)) % p;
        trim(r);
        if (r.empty()) break;
    }
    return q;
}

Poly derivative(const Poly& a, u64 p) {
    Poly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mulm(a[i], i % p, p));
    trim(d);
    return d;
}

ScreenResult screen_low_factors(const std::vector<BigInt>& coeffs, int max_k) {
    static const u64 kPrimes[] = {1000000007ULL, 998244353ULL, 754974721ULL,
                                  999999937ULL, 899999963ULL};
    ScreenResult out;
    if (max_k > 5) max_k = 5;
    for (u64 p : kPrimes) {
        Poly t = reduce(coeffs, p);
        if (deg(t) != static_cast<int>(coeffs.size()) - 1) continue;  // p | lc
        if (deg(gcd(t, derivative(t, p), p)) > 0) continue;           // not square-free mod p
        // distinct-degree split: count irreducible factors of each degree <= max_k
        std::array<int, 6> count{};
        Poly rem = t;
        Poly acc{0, 1};  // x^(p^j) mod t, advanced one Frobenius step per j
        for (int j = 1; j <= max_k && deg(rem) >= j; ++j) {
            acc = frobenius_step(acc, t, p);
            Poly diff = acc;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(diff);
            Poly gj;
            if (diff.empty()) {
                gj = rem;  // x^(p^j) == x identically: every remaining factor has degree <= j
            } else {
                Poly dr = modp::rem(diff, rem, p);
                gj = dr.empty() ? rem : gcd(rem, dr, p);
            }
            if (deg(gj) >= j) {
                count[static_cast<size_t>(j)] = deg(gj) / j;
                rem = divexact(rem, gj, p);
            }
        }
        // subset-sum reachability over the factor degree multiset
        std::array<bool, 6> reach{};
        reach[0] = true;
        for (int j = 1; j <= max_k; ++j)
            for (int rep = 0; rep < count[static_cast<size_t>(j)]; ++rep)
                for (int s = max_k; s >= j; --s)
                    if (reach[static_cast<size_t>(s - j)]) reach[static_cast<size_t>(s)] = true;
        for (int k = 1; k <= max_k; ++k)
            if (!reach[static_cast<size_t>(k)]) out.possible[static_cast<size_t>(k)] = false;
        bool all_dead = true;
        for (int k = 1; k <= max_k; ++k) all_dead = all_dead && !out.possible[static_cast<size_t>(k)];
        if (all_dead) break;
    }
    return out;
}

}  // namespace modp

// divide out `cand` as often as it exactly divides `p`
int strip_factor(MultiPoly& p, const MultiPoly& cand) {
    int mult = 0;
    MultiPoly q;
    while (try_exact_divide(p, cand, &q)) {
        p = q;
        ++mult;
    }
    return mult;
}

MultiPoly make_poly(Var var, std::initializer_list<BigInt> ascending) {
    return MultiPoly::from_univariate(var, std::vector<BigInt>(ascending));
}

}  // namespace

int sturm_real_roots(const MultiPoly& t, Var var) {
    if (t.is_zero()) throw std::domain_error("sturm_real_roots: zero polynomial");
    QPoly f = to_qpoly(t, var);
    if (qdeg(f) == 0) return 0;
    auto chain = sturm_chain(f);
    if (qdeg(chain.back()) > 0) throw NotSquareFree();
    std::vector<int> neg, pos;
    for (const auto& p : chain) {
        neg.push_back(sign_at_infinity(p, false));
        pos.push_back(sign_at_infinity(p, true));
    }
    return count_sign_changes(neg) - count_sign_changes(pos);
}

FactorSplit low_degree_factors(const MultiPoly& t_in, Var var) {
    if (t_in.is_zero()) throw std::domain_error("low_degree_factors: zero polynomial");
    if (!t_in.univariate_in(var)) throw std::domain_error("low_degree_factors: input must be univariate");
    FactorSplit out;
    out.content = t_in.content();
    if (t_in.lead_sign() < 0) out.content = -out.content;
    MultiPoly p = t_in.primitive_part().sign_normalized();

    // powers of the variable itself
    {
        auto coeffs = p.univariate_coeffs(var);
        size_t k = 0;
        while (k < coeffs.size() && coeffs[k].is_zero()) ++k;
        if (k > 0) {
            out.factors.emplace_back(MultiPoly::variable(var), static_cast<int>(k));
            std::vector<BigInt> shiftdown(coeffs.begin() + static_cast<long>(k), coeffs.end());
            p = MultiPoly::from_univariate(var, shiftdown);
        }
    }

    // linear factors a*x - b with a | lc, b | constant (rational root test)
    while (p.degree(var) >= 1) {
        auto coeffs = p.univariate_coeffs(var);
        if (!modp::screen_low_factors(coeffs, 1).possible[1]) break;
        BigInt lc = coeffs.back(), c0 = coeffs.front();
        bool found = false;
        for (const BigInt& a : positive_divisors(lc)) {
            for (const BigInt& babs : positive_divisors(c0)) {
                if (!BigInt::gcd(a, babs).is_one()) continue;
                for (int sgn = 0; sgn < 2 && !found; ++sgn) {
                    BigInt b = sgn ? -babs : babs;
                    MultiPoly cand = make_poly(var, {-b, a});
                    int mult = strip_factor(p, cand);
                    if (mult) {
                        out.factors.emplace_back(cand, mult);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }

    int max_k = 2;
    if (p.degree(var) >= 5 && p.degree(var) <= 12) max_k = 5;

    // degree-k factors, k = 2..5, by divisor interpolation: a factor g of p
    // satisfies g(x_i) | p(x_i) at every integer point, so the candidates
    // are the Lagrange lifts of divisor tuples. Exhaustive for every k the
    // stage completes; interpolation points are chosen greedily by divisor
    // count to keep the candidate set small.
    static const long kPoints[] = {0, 1, -1, 2, -2, 3, -3, 4};
    constexpr size_t kNumPoints = sizeof(kPoints) / sizeof(kPoints[0]);
    for (int k = 2; k <= max_k; ++k) {
        if (k > 2 && 2 * k > p.degree(var)) break;  // smaller cofactors were already split off
        bool capped = false;
        bool retry = true;
        while (retry && p.degree(var) >= k) {
            retry = false;
            auto coeffs = p.univariate_coeffs(var);
            if (!modp::screen_low_factors(coeffs, k).possible[static_cast<size_t>(k)]) break;
            BigInt lc = coeffs.back();

            // values and divisor sets at all sample points; points whose
            // values resist factoring are usable for prescreening only
            struct Point {
                long x;
                BigInt value;
                std::vector<BigInt> divisors;  // empty: prescreen-only
            };
            std::vector<Point> pts;
            for (size_t i = 0; i < kNumPoints; ++i) {
                Point pt;
                pt.x = kPoints[i];
                pt.value = eval_at_int(coeffs, pt.x);
                try {
                    if (pt.value.bit_length() <= 120) pt.divisors = positive_divisors(pt.value);
                } catch (const std::domain_error&) {
                    pt.divisors.clear();
                }
                pts.push_back(std::move(pt));
            }
            std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
                bool ua = !a.divisors.empty(), ub = !b.divisors.empty();
                if (ua != ub) return ua;
                return a.divisors.size() < b.divisors.size();
            });
            double combos = 1.0;
            bool enough = true;
            for (int i = 0; i <= k; ++i) {
                if (pts[static_cast<size_t>(i)].divisors.empty()) enough = false;
                else combos *= 2.0 * static_cast<double>(pts[static_cast<size_t>(i)].divisors.size());
            }
            double budget = k == 2 ? 2e6 : 5e4;
            if (!enough || combos > budget) {
                if (k == 2 && !enough)
                    throw std::domain_error("low_degree_factors: quadratic search out of supported range");
                capped = true;
                break;
            }

            // denominator-cleared Lagrange basis over the chosen points
            std::vector<std::vector<BigInt>> basis;   // D * L_i, integer coefficients
            BigInt denom(1);
            {
                std::vector<QPoly> lagr;
                for (int i = 0; i <= k; ++i) {
                    QPoly li{Rational(1)};
                    for (int j = 0; j <= k; ++j) {
                        if (j == i) continue;
                        Rational scale = Rational(1) / Rational(pts[static_cast<size_t>(i)].x - pts[static_cast<size_t>(j)].x);
                        QPoly next(li.size() + 1, Rational(0));
                        for (size_t m = 0; m < li.size(); ++m) {
                            next[m + 1] = next[m + 1] + li[m] * scale;
                            next[m] = next[m] - li[m] * Rational(pts[static_cast<size_t>(j)].x) * scale;
                        }
                        li = std::move(next);
                    }
                    lagr.push_back(std::move(li));
                }
                for (const auto& li : lagr)
                    for (const auto& c : li) denom = (denom * c.den()).div_exact(BigInt::gcd(denom, c.den()));
                for (const auto& li : lagr) {
                    std::vector<BigInt> row;
                    for (const auto& c : li) row.push_back(c.num() * denom.div_exact(c.den()));
                    basis.push_back(std::move(row));
                }
            }

            // odometer over divisor choices and signs
            std::vector<size_t> idx(static_cast<size_t>(k + 1), 0);
            std::vector<int> sgn(static_cast<size_t>(k + 1), 0);
            while (true) {
                std::vector<BigInt> scaled(static_cast<size_t>(k + 1), BigInt(0));
                for (int i = 0; i <= k; ++i) {
                    BigInt v = pts[static_cast<size_t>(i)].divisors[idx[static_cast<size_t>(i)]];
                    if (sgn[static_cast<size_t>(i)]) v = -v;
                    for (size_t m = 0; m < basis[static_cast<size_t>(i)].size(); ++m)
                        scaled[m] += basis[static_cast<size_t>(i)][m] * v;
                }
                bool ok = true;
                std::vector<BigInt> cand;
                for (const auto& c : scaled) {
                    if (!c.divisible_by(denom)) {
                        ok = false;
                        break;
                    }
                    cand.push_back(c.div_exact(denom));
                }
                if (ok) ok = cand.back().sign() > 0 && lc.divisible_by(cand.back());
                if (ok) {
                    BigInt content(0);
                    for (const auto& c : cand) content = BigInt::gcd(content, c);
                    ok = content.is_one();
                }
                if (ok) {
                    for (size_t i = static_cast<size_t>(k + 1); i < pts.size() && ok; ++i) {
                        BigInt gv = eval_at_int(cand, pts[i].x);
                        ok = !gv.is_zero() && pts[i].value.divisible_by(gv);
                    }
                }
                if (ok) {
                    MultiPoly candidate = MultiPoly::from_univariate(var, cand);
                    int mult = strip_factor(p, candidate);
                    if (mult) {
                        out.factors.emplace_back(candidate, mult);
                        retry = true;
                        break;  // residual changed: restart this k
                    }
                }
                // advance odometer
                int pos = 0;
                for (; pos <= k; ++pos) {
                    size_t i = static_cast<size_t>(pos);
                    if (sgn[i] == 0) {
                        sgn[i] = 1;
                        break;
                    }
                    sgn[i] = 0;
                    if (++idx[i] < pts[i].divisors.size()) break;
                    idx[i] = 0;
                }
                if (pos > k) break;
            }
        }
        if (capped) break;  // factors of this degree not excluded; bound stays honest
        out.residual_checked_bound = k;
    }

    // residual with every factor degree up to floor(deg/2) excluded is
    // itself irreducible
    if (p.degree(var) >= 1 && out.residual_checked_bound >= p.degree(var) / 2) {
        out.factors.emplace_back(p, 1);
        p = MultiPoly::constant(BigInt(1));
    }
    if (p.degree(var) >= 1) {
        out.residual = p;
    } else {
        out.residual = MultiPoly::constant(BigInt(1));
        // a leftover constant must be a unit here since p was primitive
    }
    return out;
}


FieldReport classify_cusp_field(const MultiPoly& t, Var var) {
    if (t.is_zero()) throw std::domain_error("classify_cusp_field: zero polynomial");
    FieldReport rep;
    rep.var = var;
    if (t.is_constant()) {
        rep.poly = MultiPoly::constant(BigInt(1));
        rep.degree = 0;
        rep.verdict = Verdict::RealOnly;
        rep.filtered = MultiPoly::constant(BigInt(1));
        rep.filtered_empty = true;
        return rep;
    }
    rep.poly = squarefree_primitive(t, var);
    rep.degree = rep.poly.degree(var);
    FactorSplit split = low_degree_factors(rep.poly, var);
    rep.residual_checked_bound = split.residual_checked_bound;
    // quadratic exhaustiveness is what makes the QuadImag verdicts decidable
    if (!split.residual.is_constant() && split.residual_checked_bound < 2)
        throw std::domain_error("classify_cusp_field: quadratic factor search exceeded its budget");

    MultiPoly filtered = MultiPoly::constant(BigInt(1));
    bool any_nonreal = false;
    for (const auto& [fac, mult] : split.factors) {
        FactorVerdict fv;
        fv.factor = fac;
        fv.multiplicity = mult;
        fv.degree = fac.degree(var);
        if (fv.degree == 1) {
            fv.real_roots = 1;
            fv.verdict = Verdict::RealOnly;
        } else if (fv.degree == 2) {
            auto c = fac.univariate_coeffs(var);
            BigInt disc = c[1] * c[1] - BigInt(4) * c[2] * c[0];
            if (disc.sign() > 0) {
                fv.real_roots = 2;
                fv.verdict = Verdict::RealOnly;
            } else {
                fv.real_roots = 0;
                fv.verdict = Verdict::QuadImag;
                fv.disc_squarefree = squarefree_decompose(disc).squarefree;
                rep.quad_imag_fields.push_back(fv.disc_squarefree);
            }
        } else {
            // cubic from the degree-3 sweep: never a quadratic-imaginary witness
            fv.real_roots = sturm_real_roots(fac, var);
            fv.verdict = fv.real_roots == fv.degree ? Verdict::RealOnly : Verdict::HigherDegree;
        }
        if (fv.verdict != Verdict::RealOnly) {
            filtered = filtered * fac;
            any_nonreal = true;
        }
        rep.real_root_count += fv.real_roots;
        rep.factors.push_back(std::move(fv));
    }
    if (!split.residual.is_constant()) {
        FactorVerdict fv;
        fv.factor = split.residual;
        fv.multiplicity = 1;
        fv.degree = split.residual.degree(var);
        fv.is_residual = true;
        fv.real_roots = sturm_real_roots(split.residual, var);
        fv.verdict = fv.real_roots == fv.degree ? Verdict::RealOnly : Verdict::HigherDegree;
        if (fv.verdict != Verdict::RealOnly) {
            filtered = filtered * split.residual;
            any_nonreal = true;
        }
        rep.real_root_count += fv.real_roots;
        rep.factors.push_back(std::move(fv));
    }
    rep.filtered = filtered;
    rep.filtered_empty = !any_nonreal;
    if (!any_nonreal)
        rep.verdict = Verdict::RealOnly;
    else if (!rep.quad_imag_fields.empty())
        rep.verdict = Verdict::QuadImag;
    else
        rep.verdict = Verdict::HigherDegree;
    return rep;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

MultiPoly cyclotomic(long m, Var v) {
    if (m < 1) throw std::domain_error("cyclotomic: index must be positive");
    std::map<long, MultiPoly> memo;
    for (long d = 1; d <= m; ++d) {
        if (m % d) continue;
        std::vector<BigInt> xm1(static_cast<size_t>(d + 1), BigInt(0));
        xm1.front() = BigInt(-1);
        xm1.back() = BigInt(1);
        MultiPoly num = MultiPoly::from_univariate(v, xm1);
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = exact_divide(num, memo.at(e));
        memo.emplace(d, std::move(num));
    }
    return memo.at(m);
}

MultiPoly cos_minpoly(long n) {
    if (n < 1) throw std::domain_error("cos_minpoly: index must be positive");
    // minimal polynomial of 2cos(pi/n) = z + 1/z for z a primitive 2n-th root
    MultiPoly phi = cyclotomic(2 * n, Var::W);
    MultiPoly quad = MultiPoly::variable(Var::W).pow(2) -
                     MultiPoly::variable(Var::C) * MultiPoly::variable(Var::W) +
                     MultiPoly::constant(BigInt(1));
    MultiPoly res = resultant(phi, quad, Var::W);
    MultiPoly out = squarefree_primitive(res, Var::C);
    long expected = n == 1 ? 1 : euler_phi(2 * n) / 2;
    if (out.degree(Var::C) != static_cast<int>(expected))
        throw std::runtime_error("cos_minpoly: unexpected degree");
    return out;
}

std::vector<Surd> unit_roots_in_quad_fields(const MultiPoly& t, Var var) {
    if (t.is_zero()) throw std::domain_error("unit_roots_in_quad_fields: zero polynomial");
    Rational half(BigInt(1), BigInt(2));
    std::vector<Surd> points = {
        Surd(Rational(1)),
        Surd(Rational(-1)),
        Surd(Rational(0), Rational(1), BigInt(-1)),   // i
        Surd(Rational(0), Rational(-1), BigInt(-1)),  // -i
        Surd(half, half, BigInt(-3)),                 // z6
        Surd(-half, -half, BigInt(-3)),               // -z6
        Surd(-half, half, BigInt(-3)),                // z6^2
        Surd(half, -half, BigInt(-3)),                // -z6^2
    };
    std::vector<Surd> hits;
    for (const auto& pt : points) {
        std::array<const Surd*, kNumVars> assign{};
        assign[static_cast<int>(var)] = &pt;
        if (t.eval_surd(assign).is_zero()) hits.push_back(pt);
    }
    return hits;
}

namespace {

struct PrecisionGuard {
    long saved;
    explicit PrecisionGuard(long bits) : saved(BigFloat::working_precision()) {
        BigFloat::set_working_precision(bits);
    }
    ~PrecisionGuard() { BigFloat::set_working_precision(saved); }
};

ComplexF ceval(const std::vector<ComplexF>& coeffs, const ComplexF& z) {
    ComplexF acc{BigFloat(0), BigFloat(0)};
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * z + coeffs[static_cast<size_t>(i)];
    return acc;
}

}  // namespace

std::vector<RootEnclosure> approx_roots(const MultiPoly& t, Var var, int digits) {
    if (t.is_zero()) throw std::domain_error("approx_roots: zero polynomial");
    if (digits < 1) digits = 1;
    {
        MultiPoly g = gcd_univariate(t, t.derivative(var), var);
        if (g.degree(var) > 0) throw NotSquareFree();
    }
    auto icoeffs = t.univariate_coeffs(var);
    int n = static_cast<int>(icoeffs.size()) - 1;
    if (n <= 0) return {};

    for (int attempt = 0; attempt < 4; ++attempt) {
        long prec = 192 + 64 * attempt + static_cast<long>(digits * 3.33) + 8L * n;
        PrecisionGuard guard(prec);
        std::vector<ComplexF> coeffs, dcoeffs;
        for (const auto& c : icoeffs) coeffs.push_back({BigFloat(Rational(c)), BigFloat(0)});
        for (size_t i = 1; i < icoeffs.size(); ++i)
            dcoeffs.push_back({BigFloat(Rational(icoeffs[i] * BigInt(static_cast<long>(i)))), BigFloat(0)});

        // Fujiwara-style root bound, computed on the log scale so huge
        // coefficients cannot overflow: |root| <= 2 max_i |a_{n-i}/a_n|^(1/i)
        double lg_lc = static_cast<double>(icoeffs.back().abs().bit_length());
        double lg_radius = 0.0;
        for (int i = 1; i <= n; ++i) {
            const BigInt& a = icoeffs[static_cast<size_t>(n - i)];
            if (a.is_zero()) continue;
            double lg = (static_cast<double>(a.abs().bit_length()) - lg_lc) / i;
            if (lg > lg_radius) lg_radius = lg;
        }
        double radius = std::ldexp(2.0, static_cast<int>(lg_radius));
        std::vector<ComplexF> z;
        for (int k = 0; k < n; ++k) {
            double ang = 2.0 * 3.14159265358979312 * k / n + 0.45;
            z.push_back({BigFloat::from_double(radius * std::cos(ang)),
                         BigFloat::from_double(radius * std::sin(ang))});
        }

        long target_bits = static_cast<long>(digits * 3.33) + 12;
        BigFloat tol = BigFloat(1).ldexp(-target_bits);
        bool converged = false;
        int max_iter = (300 + 40 * n) * (attempt + 1);
        for (int it = 0; it < max_iter && !converged; ++it) {
            converged = true;
            for (int k = 0; k < n; ++k) {
                ComplexF denom = coeffs.back();
                for (int j = 0; j < n; ++j)
                    if (j != k) denom = denom * (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
                if (denom.is_zero()) {
                    converged = false;
                    // nudge coincident points apart
                    z[static_cast<size_t>(k)].re = z[static_cast<size_t>(k)].re + BigFloat(1).ldexp(-3 - k);
                    continue;
                }
                ComplexF w = ceval(coeffs, z[static_cast<size_t>(k)]) / denom;
                z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - w;
                // relative correction: large-modulus roots converge too
                BigFloat scale = BigFloat(1) + z[static_cast<size_t>(k)].abs2();
                if (w.abs2() > tol * tol * scale) converged = false;
            }
        }
        if (!converged) continue;

        // Newton polish
        for (int k = 0; k < n; ++k) {
            for (int pol = 0; pol < 3; ++pol) {
                ComplexF df = ceval(dcoeffs, z[static_cast<size_t>(k)]);
                if (df.is_zero()) break;
                z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - ceval(coeffs, z[static_cast<size_t>(k)]) / df;
            }
        }

        // radius: every z has a root within n*|f(z)/f'(z)|
        std::vector<RootEnclosure> out;
        bool ok = true;
        BigFloat round_slop = BigFloat(1).ldexp(-(prec - 16));
        for (int k = 0; k < n && ok; ++k) {
            ComplexF fz = ceval(coeffs, z[static_cast<size_t>(k)]);
            ComplexF df = ceval(dcoeffs, z[static_cast<size_t>(k)]);
            if (df.is_zero()) {
                ok = false;
                break;
            }
            BigFloat r = BigFloat(2 * n) * fz.abs() / df.abs() +
                         round_slop * (BigFloat(1) + z[static_cast<size_t>(k)].abs());
            RootEnclosure e;
            e.re = z[static_cast<size_t>(k)].re;
            e.im = z[static_cast<size_t>(k)].im;
            e.rad = r;
            e.certified_nonreal = e.im.abs() > r;
            out.push_back(std::move(e));
        }
        if (!ok) continue;

        // requested accuracy
        BigFloat want = BigFloat(Rational(BigInt(1), BigInt(10).pow(static_cast<unsigned long>(digits))));
        for (const auto& e : out)
            if (e.rad > want) ok = false;
        // pairwise disjoint discs certify one root per disc
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                ComplexF d{out[static_cast<size_t>(i)].re - out[static_cast<size_t>(j)].re,
                           out[static_cast<size_t>(i)].im - out[static_cast<size_t>(j)].im};
                if (!(d.abs() > out[static_cast<size_t>(i)].rad + out[static_cast<size_t>(j)].rad)) ok = false;
            }
        if (!ok) continue;

        std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
            if (a.re != b.re) return a.re < b.re;
            return a.im < b.im;
        });
        return out;
    }
    throw PrecisionExhausted();
}

}  // namespace dehnfill
