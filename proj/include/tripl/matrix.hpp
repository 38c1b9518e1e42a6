#pragma once

#include <optional>
#include <vector>

#include "tripl/padic.hpp"

namespace tripl {

// Dense matrix over a scalar ring with value semantics and exact-zero default.
template <class R>
struct Mat {
    long rows = 0, cols = 0;
    std::vector<R> d;

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), d((size_t)(r * c)) {}

    R& operator()(long i, long j) { return d[(size_t)(i * cols + j)]; }
    const R& operator()(long i, long j) const { return d[(size_t)(i * cols + j)]; }

    static Mat identity(long n, const R& one) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
};

template <class R>
Mat<R> operator+(const Mat<R>& a, const Mat<R>& b) {
    Mat<R> r(a.rows, a.cols);
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

template <class R>
Mat<R> operator-(const Mat<R>& a, const Mat<R>& b) {
    Mat<R> r(a.rows, a.cols);
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

template <class R>
Mat<R> operator*(const Mat<R>& a, const Mat<R>& b) {
    if (a.cols != b.rows) throw ConfigError("Mat: shape mismatch");
    Mat<R> r(a.rows, b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long k = 0; k < a.cols; ++k) {
            const R& aik = a(i, k);
            if (aik == R()) continue;
            for (long j = 0; j < b.cols; ++j) r(i, j) = r(i, j) + aik * b(k, j);
        }
    return r;
}

template <class R>
Mat<R> operator*(const Mat<R>& a, const R& s) {
    Mat<R> r = a;
    for (auto& x : r.d) x = x * s;
    return r;
}

template <class R>
std::vector<R> operator*(const Mat<R>& a, const std::vector<R>& v) {
    std::vector<R> r((size_t)a.rows);
    for (long i = 0; i < a.rows; ++i) {
        R acc{};
        for (long j = 0; j < a.cols; ++j) acc = acc + a(i, j) * v[(size_t)j];
        r[(size_t)i] = acc;
    }
    return r;
}

template <class R>
bool operator==(const Mat<R>& a, const Mat<R>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t i = 0; i < a.d.size(); ++i)
        if (!(a.d[i] == b.d[i])) return false;
    return true;
}

template <class R>
Mat<R> mat_pow(Mat<R> a, u64 e, const R& one) {
    Mat<R> r = Mat<R>::identity(a.rows, one);
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

// Characteristic polynomial det(XI - A) by the Samuelson-Berkowitz algorithm
// (division-free). Returned coefficients c[0..n] with c[j] multiplying X^{n-j}
// and c[0] = 1.
template <class R>
std::vector<R> charpoly_berkowitz(const Mat<R>& A, const R& one) {
    long n = A.rows;
    std::vector<R> p{one};
    for (long i = 0; i < n; ++i) {
        std::vector<R> T((size_t)i + 2);
        T[0] = one;
        T[1] = -A(i, i);
        std::vector<R> v((size_t)i);
        for (long j = 0; j < i; ++j) v[(size_t)j] = A(j, i);
        for (long k = 2; k <= i + 1; ++k) {
            R s{};
            for (long j = 0; j < i; ++j) s = s + A(i, j) * v[(size_t)j];
            T[(size_t)k] = -s;
            if (k <= i) {
                std::vector<R> nv((size_t)i);
                for (long r2 = 0; r2 < i; ++r2) {
                    R acc{};
                    for (long c2 = 0; c2 < i; ++c2) acc = acc + A(r2, c2) * v[(size_t)c2];
                    nv[(size_t)r2] = acc;
                }
                v = std::move(nv);
            }
        }
        std::vector<R> np((size_t)i + 2);
        for (size_t a2 = 0; a2 < T.size(); ++a2) {
            if (T[a2] == R()) continue;
            for (size_t b2 = 0; b2 < p.size(); ++b2)
                if (a2 + b2 < np.size()) np[a2 + b2] = np[a2 + b2] + T[a2] * p[b2];
        }
        p = std::move(np);
    }
    return p;
}

// Fredholm polynomial det(I - XA): coefficient of X^j is the X^{n-j}
// coefficient of the characteristic polynomial.
template <class R>
std::vector<R> fredholm_poly(const Mat<R>& A, const R& one) {
    return charpoly_berkowitz(A, one);
}

// Solve A x = b over Z/p^N with pivoting on minimal valuation. Division by a
// pivot of valuation v costs v digits (tracked by divide_exact). Throws
// PrecisionError when no pivot is determined at working precision.
inline std::vector<PadicInt> solve_padic(Mat<PadicInt> A, std::vector<PadicInt> b) {
    long n = A.rows;
    if (A.cols != n || (long)b.size() != n) throw ConfigError("solve_padic: shape");
    std::vector<long> perm(n);
    for (long i = 0; i < n; ++i) perm[i] = i;
    for (long c = 0; c < n; ++c) {
        long best = -1;
        int bestv = kInfPrec;
        for (long r = c; r < n; ++r) {
            const PadicInt& x = A(r, c);
            if (x.exact_zero() || x.is_zero_at_prec()) continue;
            if (x.valuation() < bestv) { bestv = x.valuation(); best = r; }
        }
        if (best < 0) throw PrecisionError("solve_padic: singular at working precision");
        if (best != c) {
            for (long j = 0; j < n; ++j) std::swap(A(c, j), A(best, j));
            std::swap(b[(size_t)c], b[(size_t)best]);
        }
        for (long r = c + 1; r < n; ++r) {
            if (A(r, c).exact_zero() || A(r, c).is_zero_at_prec()) { A(r, c) = PadicInt(); continue; }
            PadicInt f = divide_exact(A(r, c), A(c, c));
            for (long j = c; j < n; ++j) A(r, j) = A(r, j) - f * A(c, j);
            b[(size_t)r] = b[(size_t)r] - f * b[(size_t)c];
        }
    }
    std::vector<PadicInt> x((size_t)n);
    for (long i = n - 1; i >= 0; --i) {
        PadicInt s = b[(size_t)i];
        for (long j = i + 1; j < n; ++j) s = s - A(i, j) * x[(size_t)j];
        x[(size_t)i] = divide_exact(s, A(i, i));
    }
    return x;
}

inline Mat<PadicInt> invert_padic(const Mat<PadicInt>& A) {
    long n = A.rows;
    Mat<PadicInt> inv(n, n);
    for (long j = 0; j < n; ++j) {
        std::vector<PadicInt> e((size_t)n);
        // context from any nonzero entry
        for (const auto& x : A.d)
            if (!x.exact_zero()) { e[(size_t)j] = padic_one(x.prime(), x.prec()); break; }
        auto col = solve_padic(A, e);
        for (long i = 0; i < n; ++i) inv(i, j) = col[(size_t)i];
    }
    return inv;
}

// Smallest t >= 0 such that p^t * target lies in the Z_p-span of the given
// lattice vectors, modulo the working precision. The generators are brought to
// a diagonal-in-pivot-columns form by globally-minimal-valuation pivoting
// (Smith-style over the local ring), against which reduction is exact.
inline std::optional<int> lattice_membership_power(const std::vector<std::vector<PadicInt>>& gens,
                                                   const std::vector<PadicInt>& target, int tmax) {
    if (gens.empty()) return std::nullopt;
    size_t dim = target.size();
    std::vector<std::vector<PadicInt>> W = gens;
    std::vector<std::pair<size_t, size_t>> pivots; // (row index in W, column)
    std::vector<bool> used(W.size(), false);
    while (true) {
        int bestv = kInfPrec;
        size_t br = 0, bc = 0;
        bool found = false;
        for (size_t r = 0; r < W.size(); ++r) {
            if (used[r]) continue;
            for (size_t c = 0; c < dim; ++c) {
                const PadicInt& x = W[r][c];
                if (x.exact_zero() || x.is_zero_at_prec()) continue;
                if (x.valuation() < bestv) { bestv = x.valuation(); br = r; bc = c; found = true; }
            }
        }
        if (!found) break;
        used[br] = true;
        pivots.emplace_back(br, bc);
        for (size_t r = 0; r < W.size(); ++r) {
            if (used[r]) continue;
            const PadicInt& x = W[r][bc];
            if (x.exact_zero() || x.is_zero_at_prec()) continue;
            PadicInt f = divide_exact(x, W[br][bc]); // integral: pivot has min valuation
            for (size_t j = 0; j < dim; ++j) W[r][j] = W[r][j] - f * W[br][j];
        }
    }
    auto try_reduce = [&](std::vector<PadicInt> v) -> bool {
        for (auto [r, c] : pivots) {
            const PadicInt& x = v[c];
            if (x.exact_zero() || x.is_zero_at_prec()) continue;
            if (x.valuation() < W[r][c].valuation()) return false;
            PadicInt f = divide_exact(x, W[r][c]);
            for (size_t j = 0; j < dim; ++j) v[j] = v[j] - f * W[r][j];
        }
        for (size_t j = 0; j < dim; ++j)
            if (!v[j].is_zero_at_prec() && !v[j].exact_zero()) return false;
        return true;
    };
    for (int t = 0; t <= tmax; ++t) {
        std::vector<PadicInt> w = target;
        if (t > 0)
            for (auto& x : w)
                if (!x.exact_zero())
                    x = x * PadicInt(x.prime(), x.prec(), (i64)pow_u64_checked(x.prime(), t));
        if (try_reduce(w)) return t;
    }
    return std::nullopt;
}

} // namespace tripl
