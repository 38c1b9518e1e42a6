#include <doctest.h>

#include <random>

#include "tripl/series.hpp"

using namespace tripl;

namespace {
constexpr u64 P = 11;
constexpr int N = 8;
constexpr size_t M = 6;

PadicInt rnd(std::mt19937_64& g, u64 p = P, int n = N) {
    return PadicInt(p, n, (i64)(g() % pow_u64_checked(p, n)));
}
} // namespace

TEST_CASE("series arithmetic and inverse") {
    Series1 one = Series1::one(P, N, M);
    Series1 x = Series1::variable(P, N, M);
    Series1 f = one + x;
    Series1 g = f * f;
    CHECK(g.coeff(0).residue() == 1);
    CHECK(g.coeff(1).residue() == 2);
    CHECK(g.coeff(2).residue() == 1);
    CHECK(g.coeff(3).is_zero_at_prec());

    Series1 inv = series_inverse(f);
    CHECK(inv * f == one);
    CHECK(series_pow(f, 3) == f * f * f);
    CHECK(series_pow(f, -2) * f * f == one);
}

TEST_CASE("grouplike basics") {
    // [1+p] -> 1+X
    Series1 g = grouplike(PadicInt(P, N, 1 + (i64)P), M);
    CHECK(g.coeff(0) == padic_one(P, N - 1));
    CHECK(g.coeff(1) == padic_one(P, N - 1));
    for (size_t j = 2; j < M; ++j) CHECK(g.coeff(j).is_zero_at_prec());

    // grouplike(1) = 1
    Series1 e = grouplike(padic_one(P, N), M);
    CHECK(e.coeff(0) == padic_one(P, N - 1));
    for (size_t j = 1; j < M; ++j) CHECK(e.coeff(j).is_zero_at_prec());

    // (1+p)^2 -> (1+X)^2
    Series1 g2 = grouplike(PadicInt(P, N, 1 + (i64)P).pow(2), M);
    CHECK(g2 == g * g);

    // homomorphism on random one-units
    std::mt19937_64 rg(7);
    for (int t = 0; t < 6; ++t) {
        PadicInt u = padic_one(P, N) + mul_int(rnd(rg), (i64)P);
        PadicInt v = padic_one(P, N) + mul_int(rnd(rg), (i64)P);
        CHECK(grouplike(u * v, M) == grouplike(u, M) * grouplike(v, M));
    }
}

TEST_CASE("diamond and half_diamond") {
    CHECK(diamond(1, P, N, M) == Series1::one(P, N - 1, M));
    CHECK(diamond(1 + (i64)P, P, N, M) == grouplike(PadicInt(P, N, 1 + (i64)P), M));
    // multiplicativity
    CHECK(diamond(2 * 3, P, N, M) == diamond(2, P, N, M) * diamond(3, P, N, M));
    // half_diamond squares to diamond (spec: z=2, p=11)
    CHECK(half_diamond(2, P, N, M) * half_diamond(2, P, N, M) == diamond(2, P, N, M));
}

TEST_CASE("specialize is a ring hom and matches diamond values") {
    std::mt19937_64 rg(11);
    ArithPoint Q(3);
    for (int t = 0; t < 5; ++t) {
        Series1 f(std::vector<PadicInt>{rnd(rg), rnd(rg), rnd(rg), rnd(rg), rnd(rg), rnd(rg)});
        Series1 g(std::vector<PadicInt>{rnd(rg), rnd(rg), rnd(rg), rnd(rg), rnd(rg), rnd(rg)});
        PadicInt lhs = specialize(f * g, Q, P, N);
        PadicInt rhs = specialize(f, Q, P, N) * specialize(g, Q, P, N);
        CHECK(lhs == rhs);
    }
    // specialize(1+X, k) = (1+p)^k
    Series1 f = Series1::one(P, N, M) + Series1::variable(P, N, M);
    CHECK(specialize(f, ArithPoint(3), P, N) == PadicInt(P, N, 1 + (i64)P).pow(3));
    // specialize(X, 0) = 0
    CHECK(specialize(Series1::variable(P, N, M), ArithPoint(0), P, N).is_zero_at_prec());
    // specialize(diamond(z), k) = eps(z)(z w^{-1}(z))^k, Hypothesis (5) shape
    for (i64 z : {2, 3, 7}) {
        for (long k : {1L, 2L, 5L}) {
            PadicInt want = one_unit_part(z, P, N).pow(k);
            CHECK(specialize(diamond(z, P, N, M), ArithPoint(k), P, N) == want);
        }
    }
    // half_diamond at k=2 equals the weight-1 diamond value
    CHECK(specialize(half_diamond(2, P, N, M), ArithPoint(2), P, N) == one_unit_part(2, P, N));
}

TEST_CASE("newton interpolation: round trip on polynomials") {
    std::mt19937_64 rg(23);
    // nodes at arithmetic weights k = 2 + 10m (trivial finite part)
    std::vector<PadicInt> nodes;
    for (long m = 0; m < (long)M; ++m) nodes.push_back(point_xvalue(ArithPoint(2 + 10 * m), P, N));

    for (int t = 0; t < 20; ++t) {
        std::vector<PadicInt> coeffs(M);
        for (auto& x : coeffs) x = rnd(rg);
        std::vector<PadicInt> vals;
        for (const auto& nd : nodes) {
            PadicInt acc;
            for (size_t j = M; j-- > 0;) acc = acc * nd + coeffs[j];
            vals.push_back(acc);
        }
        Series1 rec = newton_interpolate(nodes, vals);
        for (size_t j = 0; j < M; ++j) CHECK(rec.coeff(j) == coeffs[j]);
        // ledger precision stays meaningful
        CHECK(rec.min_prec() >= 3);
    }

    // constant values -> constant polynomial
    std::vector<PadicInt> cv(M, PadicInt(P, N, 42));
    Series1 cst = newton_interpolate(nodes, cv);
    CHECK(cst.coeff(0) == PadicInt(P, N, 42));
    for (size_t j = 1; j < M; ++j) CHECK(cst.coeff(j).is_zero_at_prec());

    // values = nodes -> the polynomial X
    Series1 idp = newton_interpolate(nodes, nodes);
    CHECK(idp.coeff(0).is_zero_at_prec());
    CHECK(idp.coeff(1) == padic_one(P, N));

    // coincident nodes fail with a precision error
    std::vector<PadicInt> bad = nodes;
    bad[1] = bad[0];
    CHECK_THROWS_AS(newton_interpolate(bad, cv), PrecisionError);
}

TEST_CASE("exp and log series") {
    // exp(0) = 1
    Series1 z = Series1::constant(padic_zero(P, N), M);
    CHECK(exp_series(z) == Series1::one(P, N, M));

    // exp(p)exp(p) = exp(2p) (constant series)
    Series1 cp = Series1::constant(PadicInt(P, N, (i64)P), M);
    Series1 c2p = Series1::constant(PadicInt(P, N, 2 * (i64)P), M);
    CHECK(exp_series(cp) * exp_series(cp) == exp_series(c2p));

    // log then exp round trip at reduced precision
    std::mt19937_64 rg(5);
    Series1 f = Series1::one(P, N, M);
    for (size_t j = 0; j < M; ++j) f.c[j] += mul_int(rnd(rg), (i64)P);
    Series1 lg = log_series(f);
    Series1 back = exp_series(lg);
    CHECK(back == f);
    CHECK_THROWS_AS(log_series(Series1::constant(PadicInt(P, N, 2), M)), DomainError);
}

TEST_CASE("coleman reparametrization") {
    long k0 = 12;
    PadicInt eps(P, N, (i64)P); // scale p
    // n a Teichmuller lift: one-unit part 1 -> the constant series 1
    {
        i64 n = (i64)teichmuller(2, P, N).residue();
        Series1 r = coleman_reparam(n, k0, eps, M);
        CHECK(r.coeff(0) == padic_one(P, N - 1));
        for (size_t j = 1; j < M; ++j) CHECK(r.coeff(j).is_zero_at_prec());
    }
    // eps = 0: constant (n w^{-1}(n))^{k0}
    {
        Series1 r = coleman_reparam(2, k0, padic_zero(P, N), M);
        CHECK(r.coeff(0) == one_unit_part(2, P, N).pow(k0));
        for (size_t j = 1; j < M; ++j) CHECK(r.coeff(j).is_zero_at_prec());
    }
    // round trip at k = k0 + p: the disc coordinate is b = (k-k0)/eps = 1
    {
        Series1 r = coleman_reparam(2, k0, eps, M);
        // tail bound: coefficient m has valuation >= 2m - v(m!), so the omitted
        // tail at X = 1 sits above 2M - M/(p-1)
        int tail = (int)(2 * M - M / (P - 1));
        PadicInt got = eval_at(r, padic_one(P, N), tail);
        PadicInt want = one_unit_part(2, P, N).pow(k0 + (long)P);
        CHECK(got == want);
    }
}

TEST_CASE("recenter is exact") {
    std::mt19937_64 rg(9);
    std::vector<PadicInt> coeffs(M);
    for (auto& x : coeffs) x = rnd(rg);
    Series1 f(coeffs);
    PadicInt c = point_xvalue(ArithPoint(12), P, N);
    Series1 g = recenter(f, c);
    for (long k : {2L, 12L, 22L}) {
        PadicInt x = point_xvalue(ArithPoint(k), P, N);
        // compare raw polynomial evaluations (no tail cap: the poly is exact)
        CHECK(eval_at(f, x, kInfPrec) == eval_at(g, x, kInfPrec));
    }
    CHECK(recenter(g, padic_zero(P, N)) == f);
}

TEST_CASE("three-variable series") {
    std::array<size_t, 3> sh{3, 2, 2};
    Series3 one = Series3::constant(padic_one(P, N), sh);
    Series1 d2 = diamond(2, P, N, 3);
    Series3 a = embed_series1(d2, 0, sh);
    Series3 b = embed_series1(diamond(2, P, N, 2), 1, sh);
    Series3 prod = a * b;
    // specialization splits across variables
    std::array<ArithPoint, 3> Q{ArithPoint(4), ArithPoint(2), ArithPoint(0)};
    PadicInt lhs = specialize3(prod, Q, P, N);
    PadicInt rhs = one_unit_part(2, P, N).pow(4) * one_unit_part(2, P, N).pow(2);
    CHECK(lhs == rhs);
    CHECK(specialize3(one, Q, P, N) == padic_one(P, N));

    Series3 inv = series3_inverse(prod);
    CHECK(specialize3(inv, Q, P, N) * lhs == padic_one(P, 2));

    // 3d interpolation round trip: sample a low-degree polynomial
    std::vector<PadicInt> n1, n2, n3;
    for (long m = 0; m < 3; ++m) n1.push_back(point_xvalue(ArithPoint(2 + 10 * m), P, N));
    for (long m = 0; m < 2; ++m) n2.push_back(point_xvalue(ArithPoint(4 + 10 * m), P, N));
    for (long m = 0; m < 2; ++m) n3.push_back(point_xvalue(ArithPoint(6 + 10 * m), P, N));
    std::vector<PadicInt> cube(3 * 2 * 2);
    auto f = [&](const PadicInt& x, const PadicInt& y, const PadicInt& z) {
        return x * y + z + mul_int(x, 5) + padic_one(P, N);
    };
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < 2; ++k) cube[(i * 2 + j) * 2 + k] = f(n1[i], n2[j], n3[k]);
    Series3 rec = newton_interpolate_3d(n1, n2, n3, cube);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < 2; ++k) {
                PadicInt got = specialize3(rec, {n1[i], n2[j], n3[k]});
                CHECK(got == cube[(i * 2 + j) * 2 + k]);
            }
}
