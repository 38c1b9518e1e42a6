#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tripl/errors.hpp"

namespace tripl {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kInfPrec = std::numeric_limits<int>::max() / 2;

inline u64 pow_u64_checked(u64 b, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<u64>::max() / b / 2)
            throw ConfigError("p^N exceeds the 63-bit residue budget");
        r *= b;
    }
    return r;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m for gcd(a,m)=1, by extended Euclid.
inline u64 invmod_u64(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = (i64)m, nr = (i64)(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw DomainError("invmod: not a unit");
    return (u64)(t < 0 ? t + (i64)m : t);
}

// An element of Z/p^N with tracked prime and absolute precision. Arithmetic
// reduces to the smaller operand precision; exact division by p^v lowers the
// precision by v. The default-constructed value is the exact integer 0, which
// adopts the other operand's context (so accumulators and vector resizes work).
class PadicInt {
    u64 p_ = 0;        // 0 marks exact zero
    int prec_ = kInfPrec;
    u64 mod_ = 0;      // p^prec, cached
    u64 r_ = 0;        // 0 <= r_ < mod_

public:
    PadicInt() = default;

    PadicInt(u64 p, int prec, i64 value) : p_(p), prec_(prec) {
        if (p < 2) throw ConfigError("PadicInt: p must be >= 2");
        if (prec < 0) throw ConfigError("PadicInt: negative precision");
        mod_ = pow_u64_checked(p, prec);
        i64 v = value % (i64)mod_;
        if (v < 0) v += (i64)mod_;
        r_ = (u64)v;
    }

    static PadicInt from_raw(u64 p, int prec, u64 residue_reduced) {
        PadicInt x(p, prec, 0);
        x.r_ = residue_reduced % x.mod_;
        return x;
    }

    static PadicInt from_big(u64 p, int prec, const BigInt& value) {
        PadicInt x(p, prec, 0);
        BigInt m = BigInt(pow_u64_checked(p, prec));
        BigInt v = value % m;
        if (v < 0) v += m;
        x.r_ = v.convert_to<u64>();
        return x;
    }

    bool exact_zero() const { return p_ == 0; }
    u64 prime() const { return p_; }
    int prec() const { return prec_; }
    u64 residue() const { return r_; }
    u64 modulus() const { return mod_; }

    bool is_zero_at_prec() const { return exact_zero() || r_ == 0; }

    // Value valuation; when the residue vanishes this is the precision (a
    // certified lower bound). Exact zero reports kInfPrec.
    int valuation() const {
        if (exact_zero()) return kInfPrec;
        if (r_ == 0) return prec_;
        int v = 0;
        u64 r = r_;
        while (r % p_ == 0) { r /= p_; ++v; }
        return v;
    }

    bool is_unit() const { return !exact_zero() && prec_ > 0 && r_ % p_ != 0; }

    PadicInt reduced_to(int new_prec) const {
        if (exact_zero()) return *this;
        if (new_prec >= prec_) return *this;
        if (new_prec < 0) throw PrecisionError("reduced_to: negative precision");
        PadicInt x(p_, new_prec, 0);
        x.r_ = r_ % x.mod_;
        return x;
    }

private:
    static void align(const PadicInt& a, const PadicInt& b, PadicInt& out) {
        if (a.exact_zero() && b.exact_zero()) { out = PadicInt(); return; }
        const PadicInt& ctx = a.exact_zero() ? b : a;
        int prec = std::min(a.prec_, b.prec_);
        out = PadicInt(ctx.p_, prec, 0);
        if (!a.exact_zero() && !b.exact_zero() && a.p_ != b.p_)
            throw ConfigError("PadicInt: mixed primes");
    }

public:
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
        PadicInt out;
        align(a, b, out);
        if (out.exact_zero()) return out;
        u64 x = a.exact_zero() ? 0 : a.r_ % out.mod_;
        u64 y = b.exact_zero() ? 0 : b.r_ % out.mod_;
        out.r_ = x + y >= out.mod_ ? x + y - out.mod_ : x + y;
        return out;
    }

    friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
        PadicInt out;
        align(a, b, out);
        if (out.exact_zero()) return out;
        u64 x = a.exact_zero() ? 0 : a.r_ % out.mod_;
        u64 y = b.exact_zero() ? 0 : b.r_ % out.mod_;
        out.r_ = x >= y ? x - y : x + out.mod_ - y;
        return out;
    }

    PadicInt operator-() const {
        if (exact_zero()) return *this;
        PadicInt out = *this;
        out.r_ = r_ == 0 ? 0 : mod_ - r_;
        return out;
    }

    friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
        if (a.exact_zero() || b.exact_zero()) return PadicInt();
        PadicInt out;
        align(a, b, out);
        out.r_ = mulmod_u64(a.r_ % out.mod_, b.r_ % out.mod_, out.mod_);
        return out;
    }

    PadicInt& operator+=(const PadicInt& o) { *this = *this + o; return *this; }
    PadicInt& operator-=(const PadicInt& o) { *this = *this - o; return *this; }
    PadicInt& operator*=(const PadicInt& o) { *this = *this * o; return *this; }

    // Equality modulo p^min(prec). Exact zero equals anything with residue 0.
    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        if (a.exact_zero() && b.exact_zero()) return true;
        if (a.exact_zero()) return b.r_ == 0;
        if (b.exact_zero()) return a.r_ == 0;
        if (a.p_ != b.p_) return false;
        u64 m = std::min(a.mod_, b.mod_);
        return a.r_ % m == b.r_ % m;
    }
    friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

    PadicInt inv() const {
        if (!is_unit()) throw DomainError("PadicInt::inv: not a unit");
        PadicInt out = *this;
        out.r_ = invmod_u64(r_, mod_);
        return out;
    }

    PadicInt pow(i64 e) const {
        if (exact_zero()) {
            if (e <= 0) throw DomainError("0^e, e<=0");
            return *this;
        }
        PadicInt base = e < 0 ? inv() : *this;
        u64 ee = e < 0 ? (u64)(-e) : (u64)e;
        PadicInt out = base;
        out.r_ = powmod_u64(base.r_, ee, mod_);
        return out;
    }

    // Exact division by p^v; requires valuation >= v (certified by precision
    // when the residue vanishes). The result loses v digits of precision.
    PadicInt shift_down(int v) const {
        if (v == 0) return *this;
        if (exact_zero()) return *this;
        if (valuation() < v)
            throw PrecisionError("shift_down: valuation below requested shift");
        if (prec_ - v < 0)
            throw PrecisionError("shift_down: precision exhausted");
        PadicInt out(p_, prec_ - v, 0);
        u64 pv = pow_u64_checked(p_, v);
        out.r_ = (r_ / pv) % out.mod_;
        return out;
    }

    PadicInt shift_up(int v) const {
        if (v == 0 || exact_zero()) return *this;
        PadicInt out(p_, prec_ + v, 0);
        out.r_ = mulmod_u64(r_, pow_u64_checked(p_, v) % out.mod_, out.mod_);
        return out;
    }

    std::string str() const {
        if (exact_zero()) return "0 (exact)";
        return std::to_string(r_) + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
    }
    friend std::ostream& operator<<(std::ostream& os, const PadicInt& x) { return os << x.str(); }
};

// a / b where b = unit * p^v and v_p(a) >= v; precision drops by v.
inline PadicInt divide_exact(const PadicInt& a, const PadicInt& b) {
    if (b.exact_zero()) throw DomainError("divide_exact: division by exact zero");
    int vb = b.valuation();
    if (vb >= b.prec()) throw PrecisionError("divide_exact: divisor is zero at working precision");
    if (a.exact_zero()) return a;
    PadicInt bu = b.shift_down(vb); // unit
    PadicInt au = a.shift_down(vb);
    return au * bu.inv().reduced_to(au.prec());
}

inline PadicInt padic_zero(u64 p, int prec) { return PadicInt(p, prec, 0); }
inline PadicInt padic_one(u64 p, int prec) { return PadicInt(p, prec, 1); }

// Multiplication by a plain integer, inferring the ring from x.
inline PadicInt mul_int(const PadicInt& x, i64 n) {
    if (x.exact_zero()) return x;
    return x * PadicInt(x.prime(), x.prec(), n);
}

// Teichmuller representative: the stable value of z^{p^n}, the unique
// (p-1)-th root of unity congruent to z mod p.
inline PadicInt teichmuller(i64 z, u64 p, int prec) {
    PadicInt x(p, prec, z);
    if (!x.is_unit()) throw DomainError("teichmuller: argument divisible by p");
    for (int i = 0; i < prec + 2; ++i) {
        PadicInt nx = x.pow((i64)p);
        if (nx == x) break;
        x = nx;
    }
    return x;
}

// z * omega(z)^{-1}, congruent to 1 mod p.
inline PadicInt one_unit_part(i64 z, u64 p, int prec) {
    PadicInt x(p, prec, z);
    if (!x.is_unit()) throw DomainError("one_unit_part: argument divisible by p");
    return x * teichmuller(z, p, prec).inv();
}

// Unique square root of u in 1 + pZ_p (p odd), by Newton from 1.
inline PadicInt sqrt_one_unit(const PadicInt& u) {
    if (u.exact_zero()) throw DomainError("sqrt_one_unit: zero");
    u64 p = u.prime();
    if (p == 2) throw DomainError("sqrt_one_unit: p must be odd");
    if ((u - padic_one(p, u.prec())).valuation() < 1)
        throw DomainError("sqrt_one_unit: argument not congruent to 1 mod p");
    PadicInt x = padic_one(p, u.prec());
    PadicInt half = PadicInt(p, u.prec(), 2).inv();
    for (int i = 0; i < u.prec() + 2; ++i) {
        PadicInt nx = (x + u * x.inv()) * half;
        if (nx == x) { x = nx; break; }
        x = nx;
    }
    return x;
}

// Square root of a unit u (residue a quadratic residue mod p), Newton from a
// residue root found by Euler's criterion + brute scan of the residue field.
inline PadicInt sqrt_unit(const PadicInt& u) {
    if (!u.is_unit()) throw DomainError("sqrt_unit: not a unit");
    u64 p = u.prime();
    if (p == 2) throw DomainError("sqrt_unit: p must be odd");
    u64 a = u.residue() % p;
    if (powmod_u64(a, (p - 1) / 2, p) != 1)
        throw ExtensionNeeded("sqrt_unit: residue is not a square mod p");
    u64 r0 = 0;
    for (u64 c = 1; c < p; ++c)
        if (mulmod_u64(c, c, p) == a) { r0 = c; break; }
    PadicInt x(p, u.prec(), (i64)r0);
    PadicInt half = PadicInt(p, u.prec(), 2).inv();
    for (int i = 0; i < u.prec() + 2; ++i) {
        PadicInt nx = (x + u * x.inv()) * half;
        if (nx == x) break;
        x = nx;
    }
    return x;
}

// p-adic logarithm of a one-unit, by the alternating series; valid mod p^N
// since v(x^n/n) >= n - log_p(n).
inline PadicInt padic_log_one_unit(const PadicInt& u) {
    u64 p = u.prime();
    int N = u.prec();
    PadicInt x = u - padic_one(p, N);
    if (!x.is_zero_at_prec() && x.valuation() < 1)
        throw DomainError("padic_log_one_unit: not a one-unit");
    PadicInt acc = padic_zero(p, N);
    PadicInt pw = padic_one(p, N);
    int nmax = N + 8; // n - log_p(n) > N from here on (p >= 3)
    for (int n = 1; n <= nmax; ++n) {
        pw = pw * x;
        PadicInt term = divide_exact(pw, PadicInt(p, N, n)).reduced_to(N);
        if (n % 2 == 0) acc = acc - term; else acc = acc + term;
    }
    return acc;
}

// log(u)/log(1+p) for one-units: the exponent s with u = (1+p)^s.
// Known one digit short (the division by log(1+p) has valuation 1).
inline PadicInt grouplike_exponent(const PadicInt& u) {
    u64 p = u.prime();
    PadicInt lu = padic_log_one_unit(u);
    PadicInt lp = padic_log_one_unit(padic_one(p, u.prec()) + PadicInt(p, u.prec(), (i64)p));
    return divide_exact(lu, lp);
}

} // namespace tripl
