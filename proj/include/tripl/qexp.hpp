#pragma once

#include <functional>
#include <vector>

#include "tripl/dirichlet.hpp"
#include "tripl/series.hpp"

namespace tripl {

// --- ring shims -----------------------------------------------------------

inline PadicInt mul_by_long(const PadicInt& x, long n) { return mul_int(x, n); }
inline BigInt mul_by_long(const BigInt& x, long n) { return x * n; }
inline Rational mul_by_long(const Rational& x, long n) { return x * n; }
inline Series1 mul_by_long(const Series1& x, long n) {
    Series1 r = x;
    for (auto& c : r.c) c = mul_int(c, n);
    return r;
}
inline Series3 mul_by_long(const Series3& x, long n) {
    Series3 r = x;
    for (auto& c : r.c) c = mul_int(c, n);
    return r;
}

// chi(l) * l^{k-1} evaluated in R; exponent may be negative for PadicInt-like
// rings (unit check applies).
inline PadicInt power_of_long(const PadicInt& cl, long l, long e) {
    if (cl.exact_zero()) return cl;
    return cl * PadicInt(cl.prime(), cl.prec(), l).pow(e);
}
inline BigInt power_of_long(const BigInt& cl, long l, long e) {
    if (e < 0) throw DomainError("power_of_long<BigInt>: negative exponent");
    BigInt r = cl;
    for (long i = 0; i < e; ++i) r *= l;
    return r;
}
inline Rational power_of_long(const Rational& cl, long l, long e) {
    Rational r = cl;
    for (long i = 0; i < e; ++i) r *= l;
    for (long i = 0; i > e; --i) r /= l;
    return r;
}
inline Series1 power_of_long(const Series1& cl, long l, long e) {
    Series1 r = cl;
    u64 p = 0;
    int prec = 0;
    for (const auto& x : cl.c)
        if (!x.exact_zero()) { p = x.prime(); prec = x.prec(); break; }
    if (p == 0) return Series1();
    return r * PadicInt(p, prec, l).pow(e);
}


// Truncated q-expansion sum a_n q^n, n <= B, over any coefficient ring with
// value semantics and a default-constructed exact zero (PadicInt, BigInt,
// Rational, Series1, Series3). Every operator states its exact output
// precision; products truncate to the smaller input.
template <class R>
struct QExp {
    long B = -1;           // a_0..a_B stored; -1 marks the empty expansion
    std::vector<R> a;

    QExp() = default;
    explicit QExp(long b) : B(b), a((size_t)b + 1) {}
    QExp(long b, std::vector<R> coeffs) : B(b), a(std::move(coeffs)) {
        if ((long)a.size() != B + 1) throw ConfigError("QExp: coefficient count mismatch");
    }

    R coeff(long n) const {
        if (n < 0 || n > B) return R();
        return a[(size_t)n];
    }
    R& at(long n) { return a[(size_t)n]; }

    QExp truncated(long nb) const {
        if (nb >= B) return *this;
        QExp r(nb);
        for (long n = 0; n <= nb; ++n) r.a[(size_t)n] = a[(size_t)n];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!(x == R())) return false;
        return true;
    }
};

template <class R>
QExp<R> operator+(const QExp<R>& f, const QExp<R>& g) {
    long B = std::min(f.B, g.B);
    QExp<R> r(B);
    for (long n = 0; n <= B; ++n) r.at(n) = f.coeff(n) + g.coeff(n);
    return r;
}

template <class R>
QExp<R> operator-(const QExp<R>& f) {
    QExp<R> r = f;
    for (auto& x : r.a) x = -x;
    return r;
}

template <class R>
QExp<R> operator-(const QExp<R>& f, const QExp<R>& g) {
    return f + (-g);
}

template <class R>
QExp<R> operator*(const QExp<R>& f, const QExp<R>& g) {
    long B = std::min(f.B, g.B);
    QExp<R> r(B);
    for (long i = 0; i <= B; ++i) {
        const R& fi = f.a[(size_t)i];
        if (fi == R()) continue;
        for (long j = 0; i + j <= B; ++j) {
            const R& gj = g.a[(size_t)j];
            if (gj == R()) continue;
            r.at(i + j) = r.coeff(i + j) + fi * gj;
        }
    }
    return r;
}

template <class R, class S>
QExp<R> operator*(const QExp<R>& f, const S& s) {
    QExp<R> r = f;
    for (auto& x : r.a) x = x * s;
    return r;
}

template <class R>
bool operator==(const QExp<R>& f, const QExp<R>& g) {
    long B = std::min(f.B, g.B);
    for (long n = 0; n <= B; ++n)
        if (!(f.coeff(n) == g.coeff(n))) return false;
    return true;
}

// V_d f(z) = d f(dz): b_{dn} = d a_n (the (2.1.3) normalization, with the
// factor d). Output precision d*B.
template <class R>
QExp<R> op_V(long d, const QExp<R>& f) {
    QExp<R> r(f.B * d);
    for (long n = 0; n <= f.B; ++n) r.at(d * n) = mul_by_long(f.coeff(n), d);
    return r;
}

// The formal V of section 4.1: a_n q^n -> a_n q^{mn}, no factor m.
template <class R>
QExp<R> formal_V(long m, const QExp<R>& f) {
    QExp<R> r(f.B * m);
    for (long n = 0; n <= f.B; ++n) r.at(m * n) = f.coeff(n);
    return r;
}

// U_d: b_n = a_{dn}. Output precision floor(B/d).
template <class R>
QExp<R> op_U(long d, const QExp<R>& f) {
    QExp<R> r(f.B / d);
    for (long n = 0; n <= r.B; ++n) r.at(n) = f.coeff(d * n);
    return r;
}

// Hecke operator at l on forms of weight k, level M, nebentypus chi:
//   l | M : U_l;  l not | M : b_n = a_{ln} + chi(l) l^{k-1} a_{n/l}.
template <class R>
QExp<R> op_T(long l, long k, const DirichletCharT<R>& chi, const QExp<R>& f, long level) {
    if (level % l == 0) return op_U(l, f);
    QExp<R> r(f.B / l);
    R cl = chi(l);
    R lk = power_of_long(cl, l, k - 1); // chi(l) * l^{k-1} in R
    for (long n = 0; n <= r.B; ++n) {
        R x = f.coeff(l * n);
        if (n % l == 0) x = x + lk * f.coeff(n / l);
        r.at(n) = x;
    }
    return r;
}

// Twist by a Dirichlet character: b_n = kappa(n) a_n.
template <class R>
QExp<R> twist(const DirichletCharT<R>& kappa, const QExp<R>& f) {
    QExp<R> r(f.B);
    for (long n = 0; n <= f.B; ++n) r.at(n) = kappa(n) * f.coeff(n);
    return r;
}

// d^r: b_n = n^r a_n.
template <class R>
QExp<R> d_power(long r, const QExp<R>& f) {
    QExp<R> out(f.B);
    for (long n = 0; n <= f.B; ++n) {
        R x = f.coeff(n);
        for (long i = 0; i < r; ++i) x = mul_by_long(x, n);
        out.at(n) = x;
    }
    return out;
}

// Coefficientwise multiplier b_n = m(n) * a_n, with p | n killed when the
// multiplier says so; used by the Theta-twist.
template <class R>
QExp<R> coefficient_twist(const QExp<R>& f, const std::function<R(long)>& m) {
    QExp<R> r(f.B);
    for (long n = 0; n <= f.B; ++n) r.at(n) = m(n) * f.coeff(n);
    return r;
}

// Lambda-adic Hecke operator of section 2.5 on families of tame level N1 and
// nebentypus chi:
//   l | N1 p : a(n, T_l f) = a(ln, f)
//   l not | N1 p : a(n, T_l f) = sum_{b | (n,l)} <b>_I chi(b) b^{-1} a(ln/b^2, f).
inline QExp<Series1> family_T(long l, const DirichletChar& chi, const QExp<Series1>& f, long N1,
                              u64 p) {
    bool dividing = ((long)(N1 % l) == 0) || ((u64)l == p);
    QExp<Series1> r(f.B / l);
    if (dividing) {
        for (long n = 0; n <= r.B; ++n) r.at(n) = f.coeff(l * n);
        return r;
    }
    // context for the diamond factor
    u64 pp = 0;
    int prec = 0;
    size_t M = 0;
    for (const auto& s : f.a)
        for (const auto& x : s.c)
            if (!x.exact_zero()) { pp = x.prime(); prec = x.prec(); M = s.trunc(); break; }
    if (pp == 0) throw DomainError("family_T: zero family");
    Series1 dia = diamond(l, pp, prec, M);
    PadicInt linv = PadicInt(pp, prec, l).inv();
    Series1 weight = dia * (chi(l) * linv);
    for (long n = 0; n <= r.B; ++n) {
        Series1 x = f.coeff(l * n);
        if (n % l == 0) x = x + weight * f.coeff(n / l);
        r.at(n) = x;
    }
    return r;
}

} // namespace tripl
