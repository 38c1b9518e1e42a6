#pragma once

#include <numeric>
#include <vector>

#include "tripl/bernoulli.hpp"
#include "tripl/padic.hpp"

namespace tripl {

// A Dirichlet character with values in a coefficient ring R (roots of unity
// embedded p-adically: Teichmuller lifts for prime-to-p order, polynomial
// representatives in an extension for p-power order). values[a] is chi(a) for
// 0 <= a < modulus, with the exact ring zero at non-units.
template <class R>
struct DirichletCharT {
    u64 modulus = 1;
    u64 conductor = 1;
    std::vector<R> values; // size == modulus

    R operator()(i64 n) const {
        i64 m = n % (i64)modulus;
        if (m < 0) m += (i64)modulus;
        return values[(size_t)m];
    }

    bool trivial() const {
        return conductor == 1;
    }
};

using DirichletChar = DirichletCharT<PadicInt>;

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Smallest d | M such that chi factors through (Z/d)^*.
template <class R>
u64 compute_conductor(u64 M, const std::vector<R>& values) {
    for (u64 d = 1; d <= M; ++d) {
        if (M % d != 0) continue;
        bool ok = true;
        for (u64 a = 0; a < M && ok; ++a) {
            if (gcd_u64(a, M) != 1) continue;
            for (u64 b = a + 1; b < M && ok; ++b) {
                if (gcd_u64(b, M) != 1) continue;
                if (a % d == b % d && !(values[a] == values[b])) ok = false;
            }
        }
        if (ok) return d;
    }
    return M;
}

template <class R>
DirichletCharT<R> make_char(u64 M, std::vector<R> values) {
    DirichletCharT<R> chi;
    chi.modulus = M;
    chi.values = std::move(values);
    chi.conductor = compute_conductor(M, chi.values);
    return chi;
}

inline DirichletChar trivial_char(u64 M, u64 p, int prec) {
    std::vector<PadicInt> v(M);
    for (u64 a = 0; a < M; ++a)
        if (gcd_u64(a, M) == 1) v[a] = padic_one(p, prec);
    DirichletChar chi;
    chi.modulus = M;
    chi.conductor = 1;
    chi.values = std::move(v);
    return chi;
}

// The Teichmuller character omega mod p, with values in Z/p^N.
inline DirichletChar teichmuller_char(u64 p, int prec) {
    std::vector<PadicInt> v(p);
    for (u64 a = 1; a < p; ++a) v[a] = teichmuller((i64)a, p, prec);
    return make_char<PadicInt>(p, std::move(v));
}

// omega^e (e may be negative).
inline DirichletChar teichmuller_pow(i64 e, u64 p, int prec) {
    i64 ord = (i64)p - 1;
    i64 r = e % ord; if (r < 0) r += ord;
    std::vector<PadicInt> v(p);
    for (u64 a = 1; a < p; ++a) v[a] = teichmuller((i64)a, p, prec).pow(r);
    return make_char<PadicInt>(p, std::move(v));
}

template <class R>
DirichletCharT<R> char_pow(const DirichletCharT<R>& chi, i64 e) {
    std::vector<R> v(chi.modulus);
    for (u64 a = 0; a < chi.modulus; ++a) {
        if (gcd_u64(a, chi.modulus) != 1) continue;
        v[a] = chi.values[a].pow(e);
    }
    return make_char<R>(chi.modulus, std::move(v));
}

// Complex conjugate = inverse on the torus of roots of unity.
template <class R>
DirichletCharT<R> char_conj(const DirichletCharT<R>& chi) {
    return char_pow(chi, -1);
}

// Pointwise product on the lcm of the moduli.
template <class R>
DirichletCharT<R> char_mul(const DirichletCharT<R>& a, const DirichletCharT<R>& b) {
    u64 M = std::lcm(a.modulus, b.modulus);
    std::vector<R> v(M);
    for (u64 x = 0; x < M; ++x) {
        if (gcd_u64(x, M) != 1) continue;
        v[x] = a((i64)x) * b((i64)x);
    }
    return make_char<R>(M, std::move(v));
}

// chi = chi_(l) * chi^(l): the l-part (modulus l^{v_l(M)}) and the
// prime-to-l part (modulus M / l^{v_l(M)}), split by CRT.
template <class R>
std::pair<DirichletCharT<R>, DirichletCharT<R>> char_decompose(const DirichletCharT<R>& chi, u64 l) {
    u64 M = chi.modulus;
    u64 Ml = 1;
    while (M % l == 0) { Ml *= l; M /= l; }
    u64 Mrest = chi.modulus / Ml;

    std::vector<R> vl(Ml), vr(Mrest);
    // chi_(l)(a) = chi(b), b = a mod Ml, b = 1 mod Mrest
    for (u64 a = 0; a < Ml; ++a) {
        if (gcd_u64(a, Ml) != 1) continue;
        u64 b = 0;
        for (u64 c = 0; c < chi.modulus; ++c)
            if (c % Ml == a && (Mrest == 1 || c % Mrest == 1)) { b = c; break; }
        vl[a] = chi((i64)b);
    }
    for (u64 a = 0; a < Mrest; ++a) {
        if (gcd_u64(a, Mrest) != 1) continue;
        u64 b = 0;
        for (u64 c = 0; c < chi.modulus; ++c)
            if ((Ml == 1 || c % Ml == 1) && c % Mrest == a) { b = c; break; }
        vr[a] = chi((i64)b);
    }
    return {make_char<R>(Ml, std::move(vl)), make_char<R>(Mrest, std::move(vr))};
}

template <class R>
bool char_equal(const DirichletCharT<R>& a, const DirichletCharT<R>& b) {
    if (a.modulus != b.modulus) return false;
    for (u64 x = 0; x < a.modulus; ++x)
        if (!(a.values[x] == b.values[x])) return false;
    return true;
}

// Generalized Bernoulli number B_{k,chi} for a character with values
// representable as rationals (stored alongside). Convention: for trivial chi,
// B_{1,1} = +1/2.
//   B_{k,chi} = f^{k-1} * sum_{a=1..f} chi(a) B_k(a/f),
//   B_k(x) = sum_j C(k,j) B_j x^{k-j}.
inline Rational gen_bernoulli(long k, u64 f, const std::vector<Rational>& chi_vals) {
    if (k < 0) throw DomainError("gen_bernoulli: k < 0");
    auto B = bernoulli_upto(k);
    Rational acc = 0;
    for (u64 a = 1; a <= f; ++a) {
        const Rational& c = chi_vals[a % f];
        if (c == 0) continue;
        Rational x(a, f);
        Rational bk = 0;
        Rational xp = 1; // x^0
        // B_k(x) = sum_{j=0..k} C(k,j) B_j x^{k-j}: iterate j descending power
        for (long j = k; j >= 0; --j) {
            bk += Rational(binomial_big(k, j)) * B[j] * xp;
            xp *= x;
        }
        acc += c * bk;
    }
    Rational fk = 1;
    for (long i = 0; i + 1 < k; ++i) fk *= f;
    if (k == 0) fk = Rational(1, f);
    return fk * acc;
}

// B_{k,chi} for a p-adically valued character (values in Z/p^N), by the same
// Bernoulli-polynomial formula. The small Bernoulli numbers B_j are reduced
// p-adically; for conductor f = p^t the leading j = 0 term carries 1/f, so the
// result may have negative valuation; the caller supplies `scale_by_f` to
// receive f * B_{k,chi} (always p-integral for k >= 1) instead.
inline PadicInt gen_bernoulli_padic_scaled(long k, const DirichletChar& chi, int prec) {
    u64 f = chi.conductor;
    u64 pp = 0;
    for (const auto& v : chi.values)
        if (!v.exact_zero()) { pp = v.prime(); break; }
    if (pp == 0) throw DomainError("gen_bernoulli_padic: character has no unit values");
    auto B = bernoulli_upto(k);
    // f * B_{k,chi} = sum_a chi(a) sum_j C(k,j) B_j a^{k-j} f^{j}
    PadicInt acc = padic_zero(pp, prec);
    for (u64 a = 1; a <= f; ++a) {
        PadicInt c = chi((i64)(a % f));
        if (c.is_zero_at_prec()) continue;
        PadicInt bk = padic_zero(pp, prec);
        for (long j = 0; j <= k; ++j) {
            if (B[j] == 0) continue;
            Rational fj = 1; for (long i = 0; i < j; ++i) fj *= (long)f;
            Rational aa = 1; for (long i = 0; i < k - j; ++i) aa *= (long)a;
            Rational term = Rational(binomial_big(k, j)) * B[j] * fj * aa;
            if (padic_val_rational(term, pp) < 0)
                throw PrecisionError("gen_bernoulli_padic: non-integral term");
            bk += reduce_rational(term, pp, prec);
        }
        acc += c * bk;
    }
    return acc; // equals f * B_{k,chi}
}

} // namespace tripl
