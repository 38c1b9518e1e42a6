#pragma once

#include <array>
#include <vector>

#include "tripl/padic.hpp"

namespace tripl {

// Truncated element of the Iwasawa algebra: coefficients of (X - center)^j
// for j < trunc(), over Z/p^N. The identification [1+p] <-> 1+X is global;
// the expansion center is bookkeeping for where the truncation error lives
// (specializing at the center is polynomially exact). Default center is 0.
// An empty coefficient vector is the exact zero with infinite truncation.
struct Series1 {
    std::vector<PadicInt> c;
    PadicInt center; // exact zero by default

    Series1() = default;
    explicit Series1(std::vector<PadicInt> coeffs, PadicInt ctr = PadicInt())
        : c(std::move(coeffs)), center(std::move(ctr)) {}

    static Series1 constant(const PadicInt& v, size_t M) {
        Series1 s;
        s.c.assign(M, PadicInt());
        if (M > 0) s.c[0] = v;
        return s;
    }
    static Series1 one(u64 p, int prec, size_t M) { return constant(padic_one(p, prec), M); }
    static Series1 variable(u64 p, int prec, size_t M) {
        Series1 s = constant(padic_zero(p, prec), M);
        if (M > 1) s.c[1] = padic_one(p, prec);
        return s;
    }

    bool exact_zero() const { return c.empty(); }
    size_t trunc() const { return c.size(); }

    bool is_zero_at_prec() const {
        for (const auto& x : c)
            if (!x.is_zero_at_prec()) return false;
        return true;
    }

    PadicInt coeff(size_t j) const { return j < c.size() ? c[j] : PadicInt(); }

    int min_prec() const {
        int m = kInfPrec;
        for (const auto& x : c)
            if (!x.exact_zero()) m = std::min(m, x.prec());
        return m;
    }
};

inline bool same_center(const PadicInt& a, const PadicInt& b) {
    if (a.exact_zero() && b.exact_zero()) return true;
    if (a.exact_zero()) return b.residue() == 0;
    if (b.exact_zero()) return a.residue() == 0;
    return a.residue() == b.residue() && a.prime() == b.prime();
}

inline Series1 operator+(const Series1& a, const Series1& b) {
    if (a.exact_zero()) return b;
    if (b.exact_zero()) return a;
    if (!same_center(a.center, b.center))
        throw ConfigError("Series1: mismatched expansion centers");
    size_t M = std::min(a.trunc(), b.trunc());
    Series1 r;
    r.center = a.center.exact_zero() ? b.center : a.center;
    r.c.resize(M);
    for (size_t j = 0; j < M; ++j) r.c[j] = a.c[j] + b.c[j];
    return r;
}

inline Series1 operator-(const Series1& a) {
    Series1 r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline Series1 operator-(const Series1& a, const Series1& b) { return a + (-b); }

inline Series1 operator*(const Series1& a, const Series1& b) {
    if (a.exact_zero() || b.exact_zero()) return Series1();
    if (!same_center(a.center, b.center))
        throw ConfigError("Series1: mismatched expansion centers");
    size_t M = std::min(a.trunc(), b.trunc());
    Series1 r;
    r.center = a.center.exact_zero() ? b.center : a.center;
    r.c.assign(M, PadicInt());
    for (size_t i = 0; i < std::min(a.trunc(), M); ++i) {
        if (a.c[i].exact_zero()) continue;
        for (size_t j = 0; i + j < M && j < b.trunc(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

inline Series1 operator*(const Series1& a, const PadicInt& s) {
    Series1 r = a;
    for (auto& x : r.c) x = x * s;
    return r;
}
inline Series1 operator*(const PadicInt& s, const Series1& a) { return a * s; }

inline bool operator==(const Series1& a, const Series1& b) {
    size_t M = std::max(a.trunc(), b.trunc());
    if (!a.exact_zero() && !b.exact_zero()) {
        if (!same_center(a.center, b.center)) return false;
        M = std::min(a.trunc(), b.trunc());
    }
    for (size_t j = 0; j < M; ++j)
        if (!(a.coeff(j) == b.coeff(j))) return false;
    return true;
}
inline bool operator!=(const Series1& a, const Series1& b) { return !(a == b); }

inline Series1 divide_exact(const Series1& a, const PadicInt& d) {
    Series1 r = a;
    for (auto& x : r.c) x = divide_exact(x, d);
    return r;
}

inline Series1 reduce_prec(const Series1& a, int prec) {
    Series1 r = a;
    for (auto& x : r.c)
        if (!x.exact_zero()) x = x.reduced_to(std::min(prec, x.prec()));
    return r;
}

// Taylor shift to a new expansion center (exact; no divisions).
inline Series1 recenter(const Series1& a, const PadicInt& new_center) {
    if (a.exact_zero()) return a;
    Series1 r = a;
    PadicInt d = new_center - (a.center.exact_zero()
                                   ? padic_zero(new_center.prime(), new_center.prec())
                                   : a.center);
    size_t M = r.trunc();
    for (size_t j = 0; j + 1 < M; ++j)
        for (size_t i = M - 1; i >= j + 1; --i)
            r.c[i - 1] += d * r.c[i];
    r.center = new_center;
    return r;
}

// Multiplicative inverse of a series whose constant term is a unit.
inline Series1 series_inverse(const Series1& a) {
    if (a.exact_zero() || !a.c[0].is_unit())
        throw DomainError("series_inverse: constant term not a unit");
    size_t M = a.trunc();
    Series1 r;
    r.center = a.center;
    r.c.assign(M, PadicInt());
    r.c[0] = a.c[0].inv();
    for (size_t n = 1; n < M; ++n) {
        PadicInt s;
        for (size_t j = 1; j <= n; ++j) s += a.coeff(j) * r.c[n - j];
        r.c[n] = -(r.c[0] * s);
    }
    return r;
}

inline Series1 series_pow(const Series1& a, i64 e) {
    Series1 base = e < 0 ? series_inverse(a) : a;
    u64 ee = e < 0 ? (u64)(-e) : (u64)e;
    size_t M = a.trunc();
    u64 p = 2;
    int prec = 1;
    for (const auto& x : a.c)
        if (!x.exact_zero()) { p = x.prime(); prec = x.prec(); break; }
    Series1 r = Series1::one(p, prec, M);
    while (ee) {
        if (ee & 1) r = r * base;
        base = base * base;
        ee >>= 1;
    }
    return r;
}

// An arithmetic point Q(x) = x^k eps(x) on 1+pZ_p; zeta = eps(1+p), a p-power
// order root of unity in the working ring (trivial finite part: zeta == 1).
struct ArithPoint {
    long k = 0;
    PadicInt zeta; // exact zero marks the trivial finite part

    ArithPoint() = default;
    explicit ArithPoint(long kk) : k(kk) {}
    ArithPoint(long kk, PadicInt z) : k(kk), zeta(std::move(z)) {}
    bool trivial_eps() const { return zeta.exact_zero(); }
};

// X-value of an arithmetic point: (1+p)^k * zeta - 1.
inline PadicInt point_xvalue(const ArithPoint& Q, u64 p, int prec) {
    PadicInt g = PadicInt(p, prec, 1 + (i64)p).pow(Q.k);
    if (!Q.trivial_eps()) {
        if (Q.zeta.prime() != p) throw ConfigError("point_xvalue: zeta from a different ring");
        g = g * Q.zeta;
    }
    return g - padic_one(p, prec);
}

// Evaluate at X = x. The reported precision is capped by the omitted-monomial
// bound trunc * v(x - center); evaluation at the center itself stays exact.
inline PadicInt eval_at(const Series1& f, const PadicInt& x, int tail_val_override = -1) {
    if (f.exact_zero()) return PadicInt();
    PadicInt t = f.center.exact_zero() ? x : x - f.center;
    PadicInt acc;
    for (size_t j = f.trunc(); j-- > 0;) acc = acc * t + f.c[j];
    if (acc.exact_zero()) return acc;
    long tail;
    if (tail_val_override >= 0) {
        tail = tail_val_override;
    } else {
        int vt = t.valuation();
        tail = (vt >= kInfPrec / 2) ? kInfPrec : (long)f.trunc() * vt;
    }
    int cap = (int)std::min<long>(tail, acc.prec());
    return acc.reduced_to(cap);
}

inline PadicInt specialize(const Series1& f, const ArithPoint& Q, u64 p, int prec) {
    ArithPoint q = Q;
    if (!q.trivial_eps() && !(q.zeta == padic_one(p, prec)))
        throw ConfigError("specialize: nontrivial finite part needs a cyclotomic extension");
    return eval_at(f, point_xvalue(Q, p, prec));
}

// The group-like element (1+X)^s for a one-unit u = (1+p)^s, truncated to M.
inline Series1 grouplike(const PadicInt& u, size_t M) {
    u64 p = u.prime();
    if (p == 0) throw DomainError("grouplike: exact zero");
    if ((u - padic_one(p, u.prec())).valuation() < 1)
        throw DomainError("grouplike: not a one-unit");
    PadicInt s = grouplike_exponent(u);
    Series1 r;
    r.c.assign(M, PadicInt());
    r.c[0] = padic_one(p, s.prec());
    PadicInt b = r.c[0];
    for (size_t n = 1; n < M; ++n) {
        b = b * (s - PadicInt(p, s.prec(), (i64)n - 1));
        b = divide_exact(b, PadicInt(p, s.prec(), (i64)n));
        r.c[n] = b;
    }
    return r;
}

// <z>_Lambda = [z omega^{-1}(z)].
inline Series1 diamond(i64 z, u64 p, int prec, size_t M) {
    return grouplike(one_unit_part(z, p, prec), M);
}

// <z>^{1/2}: the group-like of the unique square root of the one-unit part.
inline Series1 half_diamond(i64 z, u64 p, int prec, size_t M) {
    return grouplike(sqrt_one_unit(one_unit_part(z, p, prec)), M);
}

// exp of a series all of whose coefficients have valuation >= 1 (p >= 3).
inline Series1 exp_series(const Series1& f) {
    if (f.exact_zero()) throw DomainError("exp_series: need ring context");
    u64 p = 2; int prec = 1;
    for (const auto& x : f.c)
        if (!x.exact_zero()) { p = x.prime(); prec = x.prec(); break; }
    if (p == 2) throw DomainError("exp_series: zero series lacks context");
    for (const auto& x : f.c)
        if (!x.exact_zero() && !x.is_zero_at_prec() && x.valuation() < 1)
            throw DomainError("exp_series: coefficient valuation < 1");
    size_t M = f.trunc();
    Series1 acc = Series1::one(p, prec, M);
    Series1 term = Series1::one(p, prec, M);
    int nmax = 2 * prec + 8;
    for (int n = 1; n <= nmax; ++n) {
        term = term * f;
        term = divide_exact(term, PadicInt(p, prec, n));
        acc = acc + term;
    }
    return acc;
}

// log of a series congruent to 1 mod (p, X).
inline Series1 log_series(const Series1& f) {
    if (f.exact_zero()) throw DomainError("log_series: zero");
    u64 p = 0; int prec = 1;
    for (const auto& x : f.c)
        if (!x.exact_zero()) { p = x.prime(); prec = x.prec(); break; }
    if (p == 0) throw DomainError("log_series: zero series");
    size_t M = f.trunc();
    Series1 g = f - Series1::one(p, prec, M);
    if (!g.c[0].is_zero_at_prec() && g.c[0].valuation() < 1)
        throw DomainError("log_series: not congruent to 1 mod (p, X)");
    Series1 acc = Series1::constant(padic_zero(p, prec), M);
    Series1 pw = Series1::one(p, prec, M);
    int nmax = prec + (int)M + 8;
    for (int n = 1; n <= nmax; ++n) {
        pw = pw * g;
        Series1 term = divide_exact(pw, PadicInt(p, prec, n));
        if (n % 2 == 0) acc = acc - term; else acc = acc + term;
    }
    return acc;
}

// Coleman disc reparametrization <n>' = <n>_Lambda((1+p)^{k0} exp(eps X log(1+p)) - 1)
// = u^{k0} exp(s eps log(1+p) X) with u the one-unit part of n, u = (1+p)^s.
inline Series1 coleman_reparam(i64 n, long k0, const PadicInt& eps_scale, size_t M) {
    u64 p = eps_scale.prime();
    int prec = eps_scale.prec();
    if (p == 0) throw ConfigError("coleman_reparam: eps_scale needs a ring context");
    PadicInt u = one_unit_part(n, p, prec);
    PadicInt s = grouplike_exponent(u);
    PadicInt lp = padic_log_one_unit(padic_one(p, prec) + PadicInt(p, prec, (i64)p));
    PadicInt cxc = s * eps_scale * lp;
    if (!cxc.is_zero_at_prec() && cxc.valuation() < 1)
        throw PrecisionError("coleman_reparam: composite series not integral");
    Series1 x = Series1::constant(padic_zero(p, cxc.prec()), M);
    if (M > 1) x.c[1] = cxc;
    Series1 e = exp_series(x);
    return e * u.pow(k0);
}

// Divided-difference (Newton) interpolation. Nodes are X-values of arithmetic
// points; values may be any type supporting subtraction and exact division by
// a PadicInt (PadicInt itself, or a coefficient fiber). Precision of every
// divided difference drops by the valuation of the node differences involved —
// the certified loss ledger, tracked element by element.
template <class V>
std::vector<V> newton_divided_differences(const std::vector<PadicInt>& nodes, std::vector<V> vals) {
    size_t M = nodes.size();
    if (vals.size() != M) throw ConfigError("newton: #values != #nodes");
    for (size_t m = 1; m < M; ++m)
        for (size_t i = M - 1; i >= m; --i) {
            PadicInt d = nodes[i] - nodes[i - m];
            if (d.is_zero_at_prec())
                throw PrecisionError("newton: node difference vanishes at working precision");
            vals[i] = divide_exact(vals[i] - vals[i - 1], d);
            if (i == m) break;
        }
    return vals;
}

// Expand Newton form into powers of (X - center).
template <class V>
std::vector<V> newton_expand(const std::vector<PadicInt>& nodes, const std::vector<V>& dd,
                             const PadicInt& center) {
    size_t M = nodes.size();
    std::vector<V> poly(M); // V default-constructs to exact zero
    if (M == 0) return poly;
    poly[0] = dd[M - 1];
    size_t deg = 0;
    for (size_t jj = M - 1; jj-- > 0;) {
        // poly <- poly * ((X - center) + (center - nodes[jj])) + dd[jj]
        PadicInt shift = center - nodes[jj];
        ++deg;
        for (size_t i = deg; i >= 1; --i) {
            V t = poly[i - 1];
            poly[i] = poly[i] + t;
            poly[i - 1] = poly[i - 1] * shift;
        }
        poly[0] = poly[0] + dd[jj];
    }
    return poly;
}

// The unique polynomial of degree < #nodes through (nodes[i], values[i]),
// in the monomial basis around `center` (default 0).
inline Series1 newton_interpolate(const std::vector<PadicInt>& nodes,
                                  const std::vector<PadicInt>& values,
                                  PadicInt center = PadicInt()) {
    auto dd = newton_divided_differences(nodes, values);
    PadicInt c0 = center;
    if (c0.exact_zero() && !nodes.empty())
        c0 = padic_zero(nodes[0].prime(), nodes[0].prec());
    auto coeffs = newton_expand(nodes, dd, c0);
    return Series1(std::move(coeffs), center);
}

// --- three-variable truncated series -------------------------------------

// R = I_1 (x) I_2 (x) I_3 realized as Z/p^N[[X1,X2,X3]] truncated to
// (M1,M2,M3), coefficients of prod_i (X_i - center_i)^{m_i}, m1-major order.
struct Series3 {
    std::array<size_t, 3> M{0, 0, 0};
    std::array<PadicInt, 3> center{};
    std::vector<PadicInt> c;

    Series3() = default;
    Series3(size_t M1, size_t M2, size_t M3) : M{M1, M2, M3} { c.assign(M1 * M2 * M3, PadicInt()); }

    bool exact_zero() const { return c.empty(); }

    size_t idx(size_t m1, size_t m2, size_t m3) const { return (m1 * M[1] + m2) * M[2] + m3; }

    PadicInt coeff(size_t m1, size_t m2, size_t m3) const {
        if (m1 >= M[0] || m2 >= M[1] || m3 >= M[2]) return PadicInt();
        return c[idx(m1, m2, m3)];
    }
    PadicInt& at(size_t m1, size_t m2, size_t m3) { return c[idx(m1, m2, m3)]; }

    static Series3 constant(const PadicInt& v, std::array<size_t, 3> M) {
        Series3 s(M[0], M[1], M[2]);
        if (!s.c.empty()) s.c[0] = v;
        return s;
    }

    bool is_zero_at_prec() const {
        for (const auto& x : c)
            if (!x.is_zero_at_prec()) return false;
        return true;
    }

    int min_prec() const {
        int m = kInfPrec;
        for (const auto& x : c)
            if (!x.exact_zero()) m = std::min(m, x.prec());
        return m;
    }
};

inline bool compatible_centers(const Series3& a, const Series3& b) {
    for (int i = 0; i < 3; ++i)
        if (!same_center(a.center[i], b.center[i])) return false;
    return true;
}

inline Series3 operator+(const Series3& a, const Series3& b) {
    if (a.exact_zero()) return b;
    if (b.exact_zero()) return a;
    if (!compatible_centers(a, b)) throw ConfigError("Series3: mismatched centers");
    Series3 r(std::min(a.M[0], b.M[0]), std::min(a.M[1], b.M[1]), std::min(a.M[2], b.M[2]));
    r.center = a.center;
    for (size_t i = 0; i < r.M[0]; ++i)
        for (size_t j = 0; j < r.M[1]; ++j)
            for (size_t k = 0; k < r.M[2]; ++k)
                r.at(i, j, k) = a.coeff(i, j, k) + b.coeff(i, j, k);
    return r;
}

inline Series3 operator-(const Series3& a) {
    Series3 r = a;
    for (auto& x : r.c) x = -x;
    return r;
}
inline Series3 operator-(const Series3& a, const Series3& b) { return a + (-b); }

inline Series3 operator*(const Series3& a, const Series3& b) {
    if (a.exact_zero() || b.exact_zero()) return Series3();
    if (!compatible_centers(a, b)) throw ConfigError("Series3: mismatched centers");
    Series3 r(std::min(a.M[0], b.M[0]), std::min(a.M[1], b.M[1]), std::min(a.M[2], b.M[2]));
    r.center = a.center;
    for (size_t i1 = 0; i1 < a.M[0] && i1 < r.M[0]; ++i1)
        for (size_t j1 = 0; j1 < a.M[1] && j1 < r.M[1]; ++j1)
            for (size_t k1 = 0; k1 < a.M[2] && k1 < r.M[2]; ++k1) {
                PadicInt av = a.coeff(i1, j1, k1);
                if (av.exact_zero() || av.is_zero_at_prec()) continue;
                for (size_t i2 = 0; i1 + i2 < r.M[0] && i2 < b.M[0]; ++i2)
                    for (size_t j2 = 0; j1 + j2 < r.M[1] && j2 < b.M[1]; ++j2)
                        for (size_t k2 = 0; k1 + k2 < r.M[2] && k2 < b.M[2]; ++k2)
                            r.at(i1 + i2, j1 + j2, k1 + k2) += av * b.coeff(i2, j2, k2);
            }
    return r;
}

inline Series3 operator*(const Series3& a, const PadicInt& s) {
    Series3 r = a;
    for (auto& x : r.c) x = x * s;
    return r;
}
inline Series3 operator*(const PadicInt& s, const Series3& a) { return a * s; }

inline bool operator==(const Series3& a, const Series3& b) {
    if (a.exact_zero() && b.exact_zero()) return true;
    if (a.exact_zero()) return b.is_zero_at_prec();
    if (b.exact_zero()) return a.is_zero_at_prec();
    if (!compatible_centers(a, b)) return false;
    size_t M1 = std::min(a.M[0], b.M[0]), M2 = std::min(a.M[1], b.M[1]), M3 = std::min(a.M[2], b.M[2]);
    for (size_t i = 0; i < M1; ++i)
        for (size_t j = 0; j < M2; ++j)
            for (size_t k = 0; k < M3; ++k)
                if (!(a.coeff(i, j, k) == b.coeff(i, j, k))) return false;
    return true;
}
inline bool operator!=(const Series3& a, const Series3& b) { return !(a == b); }

inline Series3 divide_exact(const Series3& a, const PadicInt& d) {
    Series3 r = a;
    for (auto& x : r.c) x = divide_exact(x, d);
    return r;
}

// Lift a one-variable series into variable `var` of a Series3 of shape M.
inline Series3 embed_series1(const Series1& f, int var, std::array<size_t, 3> M,
                             std::array<PadicInt, 3> centers = {}) {
    Series3 r(M[0], M[1], M[2]);
    r.center = centers;
    if (f.exact_zero()) return Series3();
    if (!same_center(f.center, centers[var]))
        throw ConfigError("embed_series1: center mismatch in target variable");
    for (size_t j = 0; j < M[(size_t)var] && j < f.trunc(); ++j) {
        size_t m[3] = {0, 0, 0};
        m[var] = j;
        r.at(m[0], m[1], m[2]) = f.c[j];
    }
    return r;
}

inline Series3 series3_inverse(const Series3& a) {
    if (a.exact_zero() || !a.c[0].is_unit())
        throw DomainError("series3_inverse: constant term not a unit");
    // Newton iteration x <- x(2 - a x); the defect is nilpotent mod the
    // truncation ideal.
    u64 p = a.c[0].prime();
    int prec = a.c[0].prec();
    Series3 x = Series3::constant(a.c[0].inv(), a.M);
    x.center = a.center;
    Series3 two = Series3::constant(PadicInt(p, prec, 2), a.M);
    two.center = a.center;
    size_t nilp = a.M[0] + a.M[1] + a.M[2] + (size_t)prec + 2;
    size_t steps = 1;
    while ((size_t(1) << steps) < nilp) ++steps;
    for (size_t i = 0; i <= steps; ++i) x = x * (two - a * x);
    return x;
}

// Evaluate at the triple of X-values; the reported precision is capped by
// min_i M_i * v(x_i - center_i) (the omitted-monomial bound).
inline PadicInt specialize3(const Series3& f, const std::array<PadicInt, 3>& x) {
    if (f.exact_zero()) return PadicInt();
    long tail = kInfPrec;
    std::array<PadicInt, 3> t;
    for (int i = 0; i < 3; ++i) {
        t[i] = f.center[i].exact_zero() ? x[i] : x[i] - f.center[i];
        int v = t[i].valuation();
        long cap = (v >= kInfPrec / 2) ? kInfPrec : (long)f.M[(size_t)i] * v;
        tail = std::min(tail, cap);
    }
    PadicInt acc;
    for (size_t i = f.M[0]; i-- > 0;) {
        PadicInt acc2;
        for (size_t j = f.M[1]; j-- > 0;) {
            PadicInt acc3;
            for (size_t k = f.M[2]; k-- > 0;) acc3 = acc3 * t[2] + f.coeff(i, j, k);
            acc2 = acc2 * t[1] + acc3;
        }
        acc = acc * t[0] + acc2;
    }
    if (acc.exact_zero()) return acc;
    return acc.reduced_to((int)std::min<long>(tail, acc.prec()));
}

inline PadicInt specialize3(const Series3& f, const std::array<ArithPoint, 3>& Q, u64 p, int prec) {
    std::array<PadicInt, 3> x;
    for (int i = 0; i < 3; ++i) {
        if (!Q[(size_t)i].trivial_eps() && !(Q[(size_t)i].zeta == padic_one(p, prec)))
            throw ConfigError("specialize3: nontrivial finite part needs a cyclotomic extension");
        x[(size_t)i] = point_xvalue(Q[(size_t)i], p, prec);
    }
    return specialize3(f, x);
}

// Iterated 3-variable Newton interpolation of a cube of values
// vals[i1][i2][i3] at nodes (n1[i1], n2[i2], n3[i3]); result expanded around
// the given centers (default: the first node of each variable, so that
// single-node directions stay exact).
inline Series3 newton_interpolate_3d(const std::vector<PadicInt>& n1,
                                     const std::vector<PadicInt>& n2,
                                     const std::vector<PadicInt>& n3,
                                     const std::vector<PadicInt>& vals,
                                     std::array<const PadicInt*, 3> centers_in = {nullptr, nullptr,
                                                                                  nullptr}) {
    size_t M1 = n1.size(), M2 = n2.size(), M3 = n3.size();
    if (vals.size() != M1 * M2 * M3) throw ConfigError("newton3d: cube shape mismatch");
    std::array<PadicInt, 3> centers;
    centers[0] = centers_in[0] ? *centers_in[0] : n1[0];
    centers[1] = centers_in[1] ? *centers_in[1] : n2[0];
    centers[2] = centers_in[2] ? *centers_in[2] : n3[0];

    Series3 r(M1, M2, M3);
    r.center = centers;
    r.c = vals;

    auto run_dir = [&](const std::vector<PadicInt>& nodes, int dir) {
        size_t Md = r.M[(size_t)dir];
        // iterate over fibers
        size_t s1 = r.M[0], s2 = r.M[1], s3 = r.M[2];
        std::vector<PadicInt> fiber(Md);
        for (size_t a = 0; a < (dir == 0 ? 1 : s1); ++a)
            for (size_t b = 0; b < (dir == 1 ? 1 : s2); ++b)
                for (size_t cidx = 0; cidx < (dir == 2 ? 1 : s3); ++cidx) {
                    for (size_t m = 0; m < Md; ++m) {
                        size_t i = dir == 0 ? m : a, j = dir == 1 ? m : b, k = dir == 2 ? m : cidx;
                        fiber[m] = r.coeff(i, j, k);
                    }
                    auto dd = newton_divided_differences(nodes, fiber);
                    auto poly = newton_expand(nodes, dd, centers[(size_t)dir]);
                    for (size_t m = 0; m < Md; ++m) {
                        size_t i = dir == 0 ? m : a, j = dir == 1 ? m : b, k = dir == 2 ? m : cidx;
                        r.at(i, j, k) = poly[m];
                    }
                }
    };
    run_dir(n3, 2);
    run_dir(n2, 1);
    run_dir(n1, 0);
    return r;
}

} // namespace tripl
