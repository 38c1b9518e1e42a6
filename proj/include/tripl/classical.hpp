#pragma once

#include <map>
#include <memory>

#include "tripl/arith.hpp"
#include "tripl/matrix.hpp"
#include "tripl/qexp.hpp"

namespace tripl {

// --- level-1 generators ----------------------------------------------------

// Dedekind eta product (without the q^{1/24}): prod (1-q^n), by the
// pentagonal number theorem.
template <class R>
QExp<R> eta_series(long B, const R& one) {
    QExp<R> f(B);
    f.at(0) = one;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > B && g2 > B) break;
        R s = (k % 2) ? -one : one;
        if (g1 <= B) f.at(g1) = f.coeff(g1) + s;
        if (g2 <= B) f.at(g2) = f.coeff(g2) + s;
    }
    return f;
}

// Delta = q prod (1-q^n)^24, exact in any ring.
template <class R>
QExp<R> delta_qexp(long B, const R& one) {
    QExp<R> f = eta_series(B, one);
    QExp<R> f2 = f * f;
    QExp<R> f4 = f2 * f2;
    QExp<R> f8 = f4 * f4;
    QExp<R> f16 = f8 * f8;
    QExp<R> e24 = f16 * f8;
    QExp<R> d(B);
    for (long n = 1; n <= B; ++n) d.at(n) = e24.coeff(n - 1);
    return d;
}

inline i64 sigma_i64(long n, int e) {
    i64 s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        i64 t = 1;
        for (int i = 0; i < e; ++i) t *= d;
        s += t;
        long q = n / d;
        if (q != d) {
            t = 1;
            for (int i = 0; i < e; ++i) t *= q;
            s += t;
        }
    }
    return s;
}

// Integer-normalized Eisenstein series E_4 = 1 + 240 sum sigma_3 q^n and
// E_6 = 1 - 504 sum sigma_5 q^n.
template <class R>
QExp<R> eis4_qexp(long B, const R& one) {
    QExp<R> f(B);
    f.at(0) = one;
    for (long n = 1; n <= B; ++n) f.at(n) = mul_by_long(one, 240 * sigma_i64(n, 3));
    return f;
}
template <class R>
QExp<R> eis6_qexp(long B, const R& one) {
    QExp<R> f(B);
    f.at(0) = one;
    for (long n = 1; n <= B; ++n) f.at(n) = mul_by_long(one, -504 * sigma_i64(n, 5));
    return f;
}

inline long dim_Mk_level1(long k) {
    if (k < 0 || k % 2) return 0;
    return k / 12 + (k % 12 == 2 ? 0 : 1);
}
inline long dim_Sk_level1(long k) {
    if (k < 4) return 0;
    return dim_Mk_level1(k) - 1;
}

// --- classical forms --------------------------------------------------------

struct ClassicalForm {
    long k = 0;
    long N = 1;              // tame level (prime to p)
    long e = 0;              // p-exponent of the level
    DirichletChar neb_tame;  // modulus dividing N
    DirichletChar neb_p;     // modulus p^e (trivial when e = 0)
    QExp<PadicInt> q;
    bool eigenform = false;
    PadicInt up_eigenvalue;  // the U_p eigenvalue when e >= 1
};

// A space of forms with a common (k, level, nebentypus), basis in echelon form
// with unit pivots at q^{lead[i]}.
struct Space {
    u64 p = 0;
    int prec = 0;
    long k = 0;
    long level = 1;
    DirichletChar neb;
    std::vector<QExp<PadicInt>> basis;
    std::vector<long> lead;

    long dim() const { return (long)basis.size(); }

    // coordinates of f in the echelon basis plus the residual series
    std::pair<std::vector<PadicInt>, QExp<PadicInt>> coords_of(const QExp<PadicInt>& f) const {
        QExp<PadicInt> r = f;
        std::vector<PadicInt> c(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            PadicInt x = r.coeff(lead[i]);
            c[i] = divide_exact(x, basis[i].coeff(lead[i]));
            long nb = std::min(r.B, basis[i].B);
            for (long n = 0; n <= nb; ++n) r.at(n) = r.coeff(n) - c[i] * basis[i].coeff(n);
            r = r.truncated(nb);
        }
        return {c, r};
    }
};

// Bring rows to reduced echelon with pivots at increasing q-indices; pivots
// must be units (true for level-1 Miller bases at p >= 5).
inline void echelonize_unit(std::vector<QExp<PadicInt>>& rows, std::vector<long>& lead, long start_q = 1) {
    lead.clear();
    size_t done = 0;
    long B = rows.empty() ? 0 : rows[0].B;
    for (long pos = start_q; pos <= B && done < rows.size(); ++pos) {
        size_t best = rows.size();
        int bestv = kInfPrec;
        for (size_t r = done; r < rows.size(); ++r) {
            const PadicInt& x = rows[r].coeff(pos);
            if (x.exact_zero() || x.is_zero_at_prec()) continue;
            if (x.valuation() < bestv) { bestv = x.valuation(); best = r; }
        }
        if (best == rows.size()) continue;
        if (bestv != 0) throw PrecisionError("echelonize_unit: non-unit pivot");
        std::swap(rows[done], rows[best]);
        PadicInt inv = rows[done].coeff(pos).inv();
        rows[done] = rows[done] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == done) continue;
            PadicInt f = rows[r].coeff(pos);
            if (f.exact_zero() || f.is_zero_at_prec()) continue;
            long nb = std::min(rows[r].B, rows[done].B);
            for (long n = 0; n <= nb; ++n)
                rows[r].at(n) = rows[r].coeff(n) - f * rows[done].coeff(n);
        }
        lead.push_back(pos);
        ++done;
    }
    if (done != rows.size()) throw PrecisionError("echelonize_unit: rows dependent at precision");
}

// Cached level-1 machinery for one (p, prec, B).
struct Level1Context {
    u64 p;
    int prec;
    long B;
    QExp<PadicInt> e4, e6, delta;
    std::map<long, QExp<PadicInt>> e4pow, e6pow, dpow;
    std::map<long, Space> cusp_cache;

    Level1Context(u64 pp, int pr, long b) : p(pp), prec(pr), B(b) {
        PadicInt one = padic_one(p, prec);
        e4 = eis4_qexp(B, one);
        e6 = eis6_qexp(B, one);
        delta = delta_qexp(B, one);
        e4pow[0] = e6pow[0] = dpow[0] = [&] {
            QExp<PadicInt> u(B);
            u.at(0) = one;
            return u;
        }();
    }

    const QExp<PadicInt>& pow_of(std::map<long, QExp<PadicInt>>& cache, const QExp<PadicInt>& base,
                                 long a) {
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
        const QExp<PadicInt>& prev = pow_of(cache, base, a - 1);
        return cache.emplace(a, prev * base).first->second;
    }

    // Echelonized basis of the weight-k level-1 cusp space.
    const Space& cusp_space(long k) {
        auto it = cusp_cache.find(k);
        if (it != cusp_cache.end()) return it->second;
        Space V;
        V.p = p;
        V.prec = prec;
        V.k = k;
        V.level = 1;
        V.neb = trivial_char(1, p, prec);
        if (k >= 4 && k % 2 == 0) {
            std::vector<QExp<PadicInt>> rows;
            for (long c = 1; 12 * c <= k; ++c) {
                long w = k - 12 * c;
                for (long b = 0; 6 * b <= w; ++b) {
                    if ((w - 6 * b) % 4) continue;
                    long a = (w - 6 * b) / 4;
                    QExp<PadicInt> m = pow_of(dpow, delta, c) * pow_of(e4pow, e4, a);
                    rows.push_back(m * pow_of(e6pow, e6, b));
                }
            }
            if ((long)rows.size() != dim_Sk_level1(k))
                throw ConfigError("cusp_space: monomial count disagrees with dimension formula");
            echelonize_unit(rows, V.lead);
            V.basis = std::move(rows);
        }
        return cusp_cache.emplace(k, std::move(V)).first->second;
    }
};

// --- Kubota-Leopoldt values --------------------------------------------------

// A p-adic number num * p^{-pshift} (covers the valuation -1 values that
// appear at the trivial branch).
struct ScaledPadic {
    PadicInt num;
    int pshift = 0;

    PadicInt to_padic() const { return num.shift_down(pshift); }
};

// L_p(1-k, omega^b), by the convergent measure sum with F = p:
//   L_p(1-k, omega^b) = -(1/(pk)) sum_{a=1}^{p-1} omega^{b-k}(a) a^k
//                        sum_{j>=0} C(k,j) B_j (p/a)^j .
// Interpolation: L_p(1-k, omega^b) = -(1 - chi(p) p^{k-1}) B_{k,chi}/k with
// chi = omega^{b-k}; for b = k mod (p-1) this is (1-p^{k-1}) zeta(1-k).
inline ScaledPadic Lp_oneminus_k(u64 p, int prec, long k, long b) {
    if (k < 1) throw DomainError("Lp_oneminus_k: k >= 1 required");
    int vk = 0;
    {
        long kk = k;
        while (kk % (long)p == 0) { kk /= (long)p; ++vk; }
    }
    // guard for the cumulative v_p(j!) loss in the binomial recurrence
    int guard = (prec + 10) / ((int)p - 1) + 3;
    int W = prec + 1 + vk + guard;
    int J = W + 2;
    auto B = bernoulli_upto(J);
    PadicInt total = padic_zero(p, W);
    for (i64 a = 1; a < (i64)p; ++a) {
        PadicInt chi = teichmuller(a, p, W).pow((b - k) % ((i64)p - 1));
        PadicInt ak = PadicInt(p, W, a).pow((i64)k);
        PadicInt inner = padic_zero(p, W);
        PadicInt ainv = PadicInt(p, W, a).inv();
        PadicInt binom = padic_one(p, W);
        for (long j = 0; j <= J; ++j) {
            if (j > 0) {
                binom = binom * PadicInt(p, W, k - j + 1);
                binom = divide_exact(binom, PadicInt(p, W, j));
            }
            if (B[j] == 0) continue;
            // term = C(k,j) * (B_j p^j) * a^{-j}; B_j may carry one p in the
            // denominator, compensated by p^j.
            Rational bjpj = B[j];
            for (long i = 0; i < j; ++i) bjpj *= (long)p;
            if (padic_val_rational(bjpj, p) < 0)
                throw PrecisionError("Lp_oneminus_k: non-integral term");
            inner += reduce_rational(bjpj, p, W) * binom * ainv.pow(j);
        }
        total += chi * ak * inner;
    }
    // value = - total / (p k); write k = p^vk ku
    long ku = k;
    for (int i = 0; i < vk; ++i) ku /= (long)p;
    PadicInt num = -(total * PadicInt(p, W, ku).inv());
    return ScaledPadic{num, 1 + vk};
}

// The ordinary p-stabilized Eisenstein series of weight k on the trivial-
// character branch: a_0 = (1/2) L_p(1-k, omega^{k}), a_n = sum_{d|n, p∤d}
// d^{k-1}; an eigenform of level p with U_p-eigenvalue 1. Valid for any k >= 2
// with k mod (p-1) != 0 (pole branch excluded).
inline ClassicalForm eisenstein_stab(u64 p, int prec, long k, long B) {
    if (k % ((long)p - 1) == 0)
        throw DomainError("eisenstein_stab: trivial branch (pole) not supported");
    ClassicalForm f;
    f.k = k;
    f.N = 1;
    f.e = 1;
    f.neb_tame = trivial_char(1, p, prec);
    f.neb_p = trivial_char(p, p, prec);
    f.q = QExp<PadicInt>(B);
    ScaledPadic L = Lp_oneminus_k(p, prec, k, k % ((long)p - 1));
    f.q.at(0) = divide_exact(L.to_padic(), PadicInt(p, prec, 2));
    for (long n = 1; n <= B; ++n) {
        PadicInt s = padic_zero(p, prec);
        for (long d : divisors_of(n)) {
            if (d % (long)p == 0) continue;
            s += PadicInt(p, prec, d).pow(k - 1);
        }
        f.q.at(n) = s;
    }
    f.eigenform = true;
    f.up_eigenvalue = padic_one(p, prec);
    return f;
}

// E_{p-1} per (A.1.1): 1 - (2(p-1)/B_{p-1}) sum sigma_{p-2}(n) q^n.
inline ClassicalForm eisenstein_Epm1(u64 p, int prec, long B) {
    if (p < 3) throw DomainError("eisenstein_Epm1: p must be odd");
    ClassicalForm f;
    f.k = (long)p - 1;
    f.N = 1;
    f.e = 0;
    f.neb_tame = trivial_char(1, p, prec);
    f.neb_p = trivial_char(1, p, prec);
    f.q = QExp<PadicInt>(B);
    f.q.at(0) = padic_one(p, prec);
    Rational c = Rational(-2 * ((long)p - 1)) / bernoulli((long)p - 1);
    PadicInt cp = reduce_rational(c, p, prec);
    for (long n = 1; n <= B; ++n) {
        PadicInt s = padic_zero(p, prec);
        for (long d : divisors_of(n)) s += PadicInt(p, prec, d).pow((i64)p - 2);
        f.q.at(n) = cp * s;
    }
    return f;
}

// E per (A.1.2): weight 1, nebentypus omega^{-1},
// E = 1 + (2/L_p(0,1)) sum_n (sum_{d|n} omega^{-1}(d)) q^n, where
// L_p(0,1) = -B_{1,omega^{-1}} has valuation -1, so the multiplier
// 2/L_p(0,1) = -2p/S with S = sum_a a omega^{-1}(a) lies in pZ_p.
inline ClassicalForm eisenstein_E_weight1(u64 p, int prec, long B) {
    ClassicalForm f;
    f.k = 1;
    f.N = 1;
    f.e = 1;
    f.neb_tame = trivial_char(1, p, prec);
    f.neb_p = teichmuller_pow(-1, p, prec);
    f.q = QExp<PadicInt>(B);
    f.q.at(0) = padic_one(p, prec);
    auto wi = teichmuller_pow(-1, p, prec + 1);
    PadicInt S = gen_bernoulli_padic_scaled(1, wi, prec + 1); // p * B_{1,w^{-1}}
    if (!S.is_unit()) throw PrecisionError("eisenstein_E_weight1: B_{1,omega^{-1}} sum not a unit");
    PadicInt mult = -(PadicInt(p, prec + 1, 2 * (i64)p) * S.inv()); // 2/L_p(0,1)
    mult = mult.reduced_to(prec);
    auto wi0 = teichmuller_pow(-1, p, prec);
    for (long n = 1; n <= B; ++n) {
        PadicInt s = padic_zero(p, prec);
        for (long d : divisors_of(n)) s += wi0(d);
        f.q.at(n) = mult * s;
    }
    return f;
}

// Small-weight level-1 Eisenstein E_k with a_1 = 1 and a_0 = zeta(1-k)/2
// (rational route; k small enough for exact Bernoulli numbers).
inline ClassicalForm eisenstein_level1(u64 p, int prec, long k, long B) {
    ClassicalForm f;
    f.k = k;
    f.N = 1;
    f.e = 0;
    f.neb_tame = trivial_char(1, p, prec);
    f.neb_p = trivial_char(1, p, prec);
    f.q = QExp<PadicInt>(B);
    Rational a0 = -bernoulli(k) / Rational(2 * k);
    f.q.at(0) = reduce_rational(a0, p, prec);
    for (long n = 1; n <= B; ++n)
        f.q.at(n) = PadicInt(p, prec, 0) + [&] {
            PadicInt s = padic_zero(p, prec);
            for (long d : divisors_of(n)) s += PadicInt(p, prec, d).pow(k - 1);
            return s;
        }();
    f.eigenform = true;
    return f;
}

inline ClassicalForm delta_form(u64 p, int prec, long B) {
    ClassicalForm f;
    f.k = 12;
    f.N = 1;
    f.e = 0;
    f.neb_tame = trivial_char(1, p, prec);
    f.neb_p = trivial_char(1, p, prec);
    f.q = delta_qexp(B, padic_one(p, prec));
    f.eigenform = true;
    return f;
}

// --- p-stabilization ---------------------------------------------------------

enum class RootChoice { Unit, NonUnit };

// Roots of X^2 - a X + c by valuation: Hensel at the unit root when v(a)=0;
// otherwise the Newton polygon splits the slopes (rescale by p^{sigma}).
inline std::pair<PadicInt, PadicInt> hecke_quadratic_roots(const PadicInt& a, const PadicInt& c) {
    u64 p = a.prime() ? a.prime() : c.prime();
    int prec = a.exact_zero() ? c.prec() : a.prec();
    int va = a.exact_zero() || a.is_zero_at_prec() ? kInfPrec : a.valuation();
    int vc = c.exact_zero() || c.is_zero_at_prec() ? kInfPrec : c.valuation();
    if (vc >= kInfPrec) throw DomainError("hecke_quadratic_roots: constant term vanishes");
    if (2 * va >= vc && va < kInfPrec && 2 * va == vc)
        throw AmbiguityError("hecke_quadratic_roots: both roots of equal valuation");
    if (2 * va > vc || va >= kInfPrec)
        throw AmbiguityError("hecke_quadratic_roots: slopes split c evenly (no designated root)");
    // slopes: va and vc - va, distinct; small root has valuation va
    int sigma = va;
    PadicInt psig = PadicInt(p, prec, 1);
    for (int i = 0; i < sigma; ++i) psig = mul_int(psig, (i64)p);
    PadicInt a2 = a.shift_down(sigma);            // unit
    PadicInt c2 = c.shift_down(2 * sigma);        // valuation vc - 2 sigma > 0
    // Newton iterate y <- (y^2 - c2)/(2y - a2) from y = a2
    PadicInt y = a2;
    for (int i = 0; i < a2.prec() + 3; ++i) {
        PadicInt denom = mul_int(y, 2) - a2;
        PadicInt ny = divide_exact(y * y - c2, denom);
        if (ny == y) { y = ny; break; }
        y = ny;
    }
    PadicInt alpha = y * psig;          // the small-valuation root, v = va
    PadicInt beta = divide_exact(c, alpha).reduced_to(alpha.prec());
    return {alpha, beta};
}

// f an eigenform of level prime to p; returns the p-stabilization whose
// U_p-eigenvalue is the requested root of X^2 - a_p X + chi(p) p^{k-1}.
inline ClassicalForm p_stabilize(const ClassicalForm& f, RootChoice choice, u64 p, int prec) {
    if (f.e != 0) throw DomainError("p_stabilize: form already has level divisible by p");
    PadicInt ap = f.q.coeff((long)p);
    PadicInt chip = f.neb_tame((i64)p);
    PadicInt c = chip * PadicInt(p, prec, (i64)p).pow(f.k - 1);
    if (choice == RootChoice::Unit && (ap.is_zero_at_prec() || ap.valuation() > 0))
        throw DomainError("p_stabilize: no unit root (form is not ordinary at p)");
    auto [alpha, beta] = hecke_quadratic_roots(ap, c);
    // alpha has the smaller valuation; Unit wants it, NonUnit wants the other
    PadicInt lam = (choice == RootChoice::Unit) ? alpha : beta;
    PadicInt other = (choice == RootChoice::Unit) ? beta : alpha;
    ClassicalForm g;
    g.k = f.k;
    g.N = f.N;
    g.e = 1;
    g.neb_tame = f.neb_tame;
    g.neb_p = trivial_char(p, p, prec);
    g.q = QExp<PadicInt>(f.q.B);
    for (long n = 0; n <= f.q.B; ++n) {
        PadicInt x = f.q.coeff(n);
        if (n % (long)p == 0) x = x - other * f.q.coeff(n / (long)p);
        g.q.at(n) = x;
    }
    g.eigenform = true;
    g.up_eigenvalue = lam;
    return g;
}

// --- eigen machinery ---------------------------------------------------------

// Matrix of T_l on the echelon basis (columns = images in coordinates).
inline Mat<PadicInt> hecke_matrix(Space& V, long l) {
    long d = V.dim();
    Mat<PadicInt> A(d, d);
    for (long j = 0; j < d; ++j) {
        auto img = op_T(l, V.k, V.neb, V.basis[(size_t)j], V.level);
        auto [coords, resid] = V.coords_of(img);
        for (long n = 0; n <= resid.B; ++n)
            if (!resid.coeff(n).is_zero_at_prec())
                throw PrecisionError("hecke_matrix: image escapes the space");
        for (long i = 0; i < d; ++i) A(i, j) = coords[(size_t)i];
    }
    return A;
}

// Simple residue roots of a polynomial over Z/p^N (coefficients c[j] of X^j),
// Hensel-lifted. Reports a defect when a residue root is multiple.
inline std::vector<PadicInt> simple_roots(const std::vector<PadicInt>& c, u64 p, int prec,
                                          bool* defect = nullptr) {
    std::vector<PadicInt> roots;
    auto eval = [&](const PadicInt& x) {
        PadicInt acc;
        for (size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
        return acc;
    };
    auto evald = [&](const PadicInt& x) {
        PadicInt acc;
        for (size_t j = c.size(); j-- > 1;) acc = mul_int(acc * x, 1) + mul_int(c[j], (i64)(j));
        return acc;
    };
    if (defect) *defect = false;
    for (i64 r = 0; r < (i64)p; ++r) {
        PadicInt x0(p, prec, r);
        if (!eval(x0).is_zero_at_prec() && eval(x0).valuation() < 1) continue;
        if (eval(x0).valuation() < 1) continue;
        PadicInt dfx = evald(x0);
        if (dfx.is_zero_at_prec() || dfx.valuation() > 0) {
            if (defect) *defect = true;
            continue;
        }
        PadicInt x = x0;
        for (int i = 0; i < prec + 3; ++i) {
            PadicInt nx = x - divide_exact(eval(x), evald(x));
            if (nx == x) { x = nx; break; }
            x = nx;
        }
        roots.push_back(x);
    }
    return roots;
}

// Kernel vector of (A - lambda I) for a simple eigenvalue: solve by valuation-
// pivoted elimination with one free column.
inline std::vector<PadicInt> eigenvector(const Mat<PadicInt>& A, const PadicInt& lam) {
    long n = A.rows;
    Mat<PadicInt> M = A;
    for (long i = 0; i < n; ++i) M(i, i) = M(i, i) - lam;
    // eliminate
    std::vector<long> pivot_col;
    long row = 0;
    std::vector<bool> colused((size_t)n, false);
    for (long c = 0; c < n && row < n; ++c) {
        long best = -1;
        int bestv = kInfPrec;
        for (long r = row; r < n; ++r) {
            if (M(r, c).exact_zero() || M(r, c).is_zero_at_prec()) continue;
            if (M(r, c).valuation() < bestv) { bestv = M(r, c).valuation(); best = r; }
        }
        if (best < 0) continue;
        if (best != row)
            for (long j = 0; j < n; ++j) std::swap(M(row, j), M(best, j));
        for (long r = 0; r < n; ++r) {
            if (r == row) continue;
            if (M(r, c).exact_zero() || M(r, c).is_zero_at_prec()) continue;
            if (M(r, c).valuation() < M(row, c).valuation())
                throw DegeneracyError("eigenvector: pivot not minimal");
            PadicInt f = divide_exact(M(r, c), M(row, c));
            for (long j = 0; j < n; ++j) M(r, j) = M(r, j) - f * M(row, j);
        }
        pivot_col.push_back(c);
        colused[(size_t)c] = true;
        ++row;
    }
    long freec = -1;
    for (long c = n - 1; c >= 0; --c)
        if (!colused[(size_t)c]) { freec = c; break; }
    if (freec < 0) throw DegeneracyError("eigenvector: kernel not visible at precision");
    std::vector<PadicInt> v((size_t)n);
    u64 p = lam.prime();
    v[(size_t)freec] = padic_one(p, lam.prec());
    for (long i = (long)pivot_col.size() - 1; i >= 0; --i) {
        long c = pivot_col[(size_t)i];
        PadicInt s;
        for (long j = 0; j < n; ++j)
            if (j != c) s = s + M(i, j) * v[(size_t)j];
        v[(size_t)c] = -divide_exact(s, M(i, c));
    }
    return v;
}

// Simultaneous eigenbasis by splitting with T_{l0} for the first separating
// prime; each result verified as a normalized eigenform on every requested
// prime up to the available precision.
inline std::vector<ClassicalForm> eigenbasis(Space& V, const std::vector<long>& hecke_primes) {
    std::vector<ClassicalForm> out;
    long d = V.dim();
    if (d == 0) return out;
    if (d == 1) {
        ClassicalForm f;
        f.k = V.k;
        f.N = 1;
        f.e = 0;
        f.neb_tame = V.neb;
        f.neb_p = trivial_char(1, V.p, V.prec);
        PadicInt a1 = V.basis[0].coeff(V.lead[0]);
        f.q = V.basis[0] * a1.inv();
        f.eigenform = true;
        out.push_back(std::move(f));
        return out;
    }
    for (long l : hecke_primes) {
        Mat<PadicInt> A = hecke_matrix(V, l);
        auto cp = charpoly_berkowitz(A, padic_one(V.p, V.prec));
        // roots of charpoly: coefficients ordered X^{d-j}; re-index ascending
        std::vector<PadicInt> asc(cp.rbegin(), cp.rend());
        bool defect = false;
        auto roots = simple_roots(asc, V.p, V.prec, &defect);
        if ((long)roots.size() != d) continue; // not separating (or defect); try next prime
        for (const auto& lam : roots) {
            auto v = eigenvector(A, lam);
            QExp<PadicInt> f(V.basis[0].B);
            for (long i = 0; i < d; ++i) {
                for (long n = 0; n <= f.B && n <= V.basis[(size_t)i].B; ++n)
                    f.at(n) = f.coeff(n) + v[(size_t)i] * V.basis[(size_t)i].coeff(n);
            }
            PadicInt a1 = f.coeff(1);
            if (a1.is_zero_at_prec() || !a1.is_unit())
                throw DegeneracyError("eigenbasis: a_1 not a unit, cannot normalize");
            f = f * a1.inv();
            ClassicalForm g;
            g.k = V.k;
            g.N = 1;
            g.e = 0;
            g.neb_tame = V.neb;
            g.neb_p = trivial_char(1, V.p, V.prec);
            g.q = f;
            g.eigenform = true;
            out.push_back(std::move(g));
        }
        // verify the eigen property on all requested primes
        for (auto& g : out)
            for (long lq : hecke_primes) {
                auto img = op_T(lq, V.k, V.neb, g.q, V.level);
                PadicInt al = g.q.coeff(lq);
                for (long n = 1; n <= img.B; ++n)
                    if (!(img.coeff(n) == al * g.q.coeff(n)))
                        throw DegeneracyError("eigenbasis: eigen verification failed");
            }
        return out;
    }
    throw DegeneracyError("eigenbasis: no separating Hecke operator at this precision");
}

} // namespace tripl
