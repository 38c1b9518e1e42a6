#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tripl/padic.hpp"

namespace tripl {

using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial_big(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

// B_0..B_n in the minus convention (B_1 = -1/2), the one entering the
// Bernoulli polynomials B_k(x) = sum_j C(k,j) B_j x^{k-j}.
inline std::vector<Rational> bernoulli_upto(long n) {
    std::vector<Rational> B(n + 1);
    for (long m = 0; m <= n; ++m) {
        if (m == 0) { B[0] = 1; continue; }
        Rational s = 0;
        for (long j = 0; j < m; ++j) s += Rational(binomial_big(m + 1, j)) * B[j];
        B[m] = -s / Rational(m + 1);
    }
    return B;
}

// The Bernoulli number itself, under the generating-function convention
// sum chi(a) t e^{at}/(e^{ft}-1) specialized to trivial chi: B_k = B_k(1),
// i.e. B_1 = +1/2 and the usual values elsewhere.
inline Rational bernoulli(long k) {
    static std::map<long, Rational> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto v = bernoulli_upto(k);
    if (k >= 1) v[1] = Rational(1, 2);
    for (long j = 0; j <= k; ++j) cache.emplace(j, v[j]);
    return v[k];
}

// v_p of a rational.
inline int padic_val_rational(const Rational& x, u64 p) {
    if (x == 0) return kInfPrec;
    int v = 0;
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

// Reduce a p-integral rational into Z/p^N.
inline PadicInt reduce_rational(const Rational& x, u64 p, int prec) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den % p == 0) {
        int v = 0;
        BigInt d = den;
        while (d % p == 0) { d /= p; ++v; }
        BigInt n2 = num;
        int vn = 0;
        while (n2 != 0 && n2 % p == 0) { n2 /= p; ++vn; }
        if (vn < v) throw DomainError("reduce_rational: negative p-adic valuation");
        // cancel p-powers
        BigInt pp = 1; for (int i = 0; i < v; ++i) pp *= p;
        return reduce_rational(Rational(num / pp, den / pp), p, prec);
    }
    PadicInt n = PadicInt::from_big(p, prec, num);
    PadicInt d = PadicInt::from_big(p, prec, den);
    return n * d.inv();
}

} // namespace tripl
