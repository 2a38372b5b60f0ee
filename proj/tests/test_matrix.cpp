#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rinf/errors.hpp"
#include "rinf/matrix.hpp"
#include "test_util.hpp"

using namespace rinf;
using testutil::Rng;

namespace {

RingValue Z(long v) { return RingValue(BigInt(v)); }

SquareMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<RingValue>> out;
    for (const auto& r : rows) {
        std::vector<RingValue> row;
        for (long v : r) row.push_back(Z(v));
        out.push_back(std::move(row));
    }
    return SquareMatrix::from_rows(out);
}

SquareMatrix random_int_matrix(Rng& rng, int n, long lo = -5, long hi = 5) {
    return SquareMatrix(n, [&](int, int) { return Z(rng.range(lo, hi)); });
}

// Unimodular by construction: a product of elementary row operations.
SquareMatrix random_unimodular(Rng& rng, int n, int steps = 8) {
    SquareMatrix m = SquareMatrix::identity(n, Z(0));
    if (n == 1) return m;
    for (int s = 0; s < steps; ++s) {
        const int i = static_cast<int>(rng.range(0, n - 1));
        int j = i;
        while (j == i) j = static_cast<int>(rng.range(0, n - 1));
        const long lambda = rng.nonzero(-3, 3);
        const SquareMatrix e(n, [&](int r, int c) {
            if (r == c) return Z(1);
            if (r == i && c == j) return Z(lambda);
            return Z(0);
        });
        m = m * e;
    }
    return m;
}

// Independent determinant oracle: Laplace expansion along the first row.
RingValue laplace_det(const SquareMatrix& m) {
    if (m.dim() == 1) return m.at(0, 0);
    RingValue acc = RingValue::zero_like(m.at(0, 0));
    for (int j = 0; j < m.dim(); ++j) {
        if (m.at(0, j).is_zero()) continue;
        SquareMatrix minor(m.dim() - 1, [&m, j](int r, int c) {
            return m.at(r + 1, c < j ? c : c + 1);
        });
        const RingValue term = m.at(0, j) * laplace_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

PolyInt T() { return PolyInt::variable(); }

} // namespace

TEST_CASE("identity is a two-sided unit") {
    Rng rng(0xabc1);
    const SquareMatrix m = random_int_matrix(rng, 4);
    const SquareMatrix id = SquareMatrix::identity(4, Z(0));
    CHECK(id * m == m);
    CHECK(m * id == m);
}

TEST_CASE("case C displayed product X(T) Y(y)") {
    // X(T) Y(y) for l = 2 is [[T,0,y,0],[0,1,0,y],[-1,0,0,0],[0,-1,0,0]].
    const RingValue t = RingValue::variable_T();
    const RingValue y = RingValue(PolyInt(BigInt(7)));
    const RingValue zero = RingValue::zero_like(t);
    const RingValue one = RingValue::one_like(t);
    const SquareMatrix x = SquareMatrix::from_rows({{t, zero, one, zero},
                                                    {zero, one, zero, one},
                                                    {-one, zero, zero, zero},
                                                    {zero, -one, zero, zero}});
    const SquareMatrix yd = SquareMatrix::from_rows({{one, zero, zero, zero},
                                                     {zero, one, zero, zero},
                                                     {zero, zero, y, zero},
                                                     {zero, zero, zero, y}});
    const SquareMatrix expected = SquareMatrix::from_rows({{t, zero, y, zero},
                                                           {zero, one, zero, y},
                                                           {-one, zero, zero, zero},
                                                           {zero, -one, zero, zero}});
    CHECK(x * yd == expected);

    // (Z_{y1} Z_{y2})(1,1) = T^2 - y1 on symbolic two-factor products
    const RingValue y2 = RingValue(PolyInt(BigInt(4)));
    const SquareMatrix yd2 = SquareMatrix::from_rows({{one, zero, zero, zero},
                                                      {zero, one, zero, zero},
                                                      {zero, zero, y2, zero},
                                                      {zero, zero, zero, y2}});
    const SquareMatrix prod = (x * yd) * (x * yd2);
    CHECK(prod.at(0, 0) == RingValue(T() * T() - PolyInt(7)));
}

TEST_CASE("direct sum laws") {
    const SquareMatrix i2 = SquareMatrix::identity(2, Z(0));
    const SquareMatrix i3 = SquareMatrix::identity(3, Z(0));
    CHECK(i2.direct_sum(i3) == SquareMatrix::identity(5, Z(0)));

    Rng rng(0xabc2);
    for (int i = 0; i < 20; ++i) {
        const SquareMatrix a1 = random_int_matrix(rng, 2), a2 = random_int_matrix(rng, 2);
        const SquareMatrix b1 = random_int_matrix(rng, 3), b2 = random_int_matrix(rng, 3);
        CHECK(a1.direct_sum(b1) * a2.direct_sum(b2) == (a1 * a2).direct_sum(b1 * b2));

        const SquareMatrix u = random_unimodular(rng, 2);
        const SquareMatrix v = random_unimodular(rng, 3);
        CHECK(u.direct_sum(v).inverse() == u.inverse().direct_sum(v.inverse()));
    }
}

TEST_CASE("trace of identity and of the displayed witnesses") {
    CHECK(SquareMatrix::identity(4, Z(0)).trace() == Z(4));

    const RingValue t = RingValue::variable_T();
    const RingValue zero = RingValue::zero_like(t);
    const RingValue one = RingValue::one_like(t);
    const RingValue beta = RingValue(PolyInt(BigInt(5)));
    const SquareMatrix z = SquareMatrix::from_rows({{t, zero, beta, zero},
                                                    {zero, one, zero, beta},
                                                    {-one, zero, zero, zero},
                                                    {zero, -one, zero, zero}});
    CHECK(z.trace() == RingValue(T() + PolyInt(1)));

    const RingValue tt1 = RingValue(T() * T() + PolyInt(1));
    const SquareMatrix zd = SquareMatrix::from_rows({{tt1, -t, zero, zero},
                                                     {-t, one, zero, zero},
                                                     {zero, zero, one, t},
                                                     {zero, zero, t, tt1}});
    CHECK(zd.trace() == RingValue(T() * T() * PolyInt(2) + PolyInt(4)));
}

TEST_CASE("exact inverse over Z, Z[T], Z_(p) and F_p") {
    CHECK(SquareMatrix::identity(3, Z(0)).inverse() == SquareMatrix::identity(3, Z(0)));

    const RingValue t = RingValue::variable_T();
    const RingValue one = RingValue::one_like(t);
    const RingValue zero = RingValue::zero_like(t);
    const SquareMatrix unipotent = SquareMatrix::from_rows({{one, t}, {zero, one}});
    CHECK(unipotent.inverse() == SquareMatrix::from_rows({{one, -t}, {zero, one}}));

    CHECK_THROWS_AS(int_matrix({{2, 0}, {0, 1}}).inverse(), NotInvertible);
    CHECK_THROWS_AS(int_matrix({{1, 1}, {2, 2}}).inverse(), NotInvertible);

    // det = 2 is a unit in Z_(5) and in F_7
    const SquareMatrix loc(2, [](int i, int j) {
        const long v[2][2] = {{2, 0}, {0, 1}};
        return RingValue::localized(v[i][j], 1, 5);
    });
    CHECK(loc.inverse().at(0, 0) == RingValue::localized(1, 2, 5));

    const SquareMatrix fp(2, [](int i, int j) {
        const long v[2][2] = {{2, 3}, {1, 2}};
        return RingValue::prime_field(v[i][j], 7);
    });
    CHECK((fp * fp.inverse()).is_identity());
}

TEST_CASE("inverse round trip on random unimodular matrices") {
    Rng rng(0xabc3);
    for (int i = 0; i < 15; ++i) {
        const int n = static_cast<int>(rng.range(1, 5));
        const SquareMatrix m = random_unimodular(rng, n);
        const SquareMatrix inv = m.inverse();
        CHECK((m * inv).is_identity());
        CHECK((inv * m).is_identity());
    }
}

TEST_CASE("commutator of equal or identity arguments collapses") {
    Rng rng(0xabc4);
    const SquareMatrix b = random_unimodular(rng, 3);
    const SquareMatrix id = SquareMatrix::identity(3, Z(0));
    CHECK(id.commutator(b) == id);
    for (int i = 0; i < 10; ++i) {
        const SquareMatrix a = random_unimodular(rng, 3);
        CHECK(a.commutator(a) == id);
    }
}

TEST_CASE("trace is invariant under conjugation") {
    Rng rng(0xabc5);
    for (int i = 0; i < 25; ++i) {
        const int n = static_cast<int>(rng.range(2, 4));
        const SquareMatrix m = random_int_matrix(rng, n);
        const SquareMatrix d = random_unimodular(rng, n);
        CHECK((d * m * d.inverse()).trace() == m.trace());
    }
    // and over Z[T]
    for (int i = 0; i < 5; ++i) {
        const SquareMatrix m(3, [&](int, int) {
            return RingValue(
                PolyInt::from_coeffs({BigInt(rng.range(-3, 3)), BigInt(rng.range(-3, 3))}));
        });
        const SquareMatrix d = random_unimodular(rng, 3).map(
            [](const RingValue& e) { return RingValue(PolyInt(e.as_integer())); });
        CHECK((d * m * d.inverse()).trace() == m.trace());
    }
}

TEST_CASE("multiplication is associative, transpose reverses products") {
    Rng rng(0xabc6);
    for (int i = 0; i < 20; ++i) {
        const int n = static_cast<int>(rng.range(1, 4));
        const SquareMatrix a = random_int_matrix(rng, n);
        const SquareMatrix b = random_int_matrix(rng, n);
        const SquareMatrix c = random_int_matrix(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
}

TEST_CASE("fraction-free determinant matches Laplace expansion") {
    Rng rng(0xabc7);
    for (int i = 0; i < 30; ++i) {
        const int n = static_cast<int>(rng.range(1, 5));
        const SquareMatrix m = random_int_matrix(rng, n);
        CHECK(determinant(m) == laplace_det(m));
    }
    for (int i = 0; i < 10; ++i) {
        const SquareMatrix m(3, [&](int, int) {
            return RingValue(
                PolyInt::from_coeffs({BigInt(rng.range(-2, 2)), BigInt(rng.range(-2, 2))}));
        });
        CHECK(determinant(m) == laplace_det(m));
    }
    for (int i = 0; i < 10; ++i) {
        const SquareMatrix m(4, [&](int, int) { return RingValue::prime_field(rng.range(0, 6), 7); });
        CHECK(determinant(m) == laplace_det(m));
    }
    for (int i = 0; i < 10; ++i) {
        const SquareMatrix m(3, [&](int, int) {
            return RingValue::localized(rng.range(-4, 4), rng.nonzero(-3, 3) * 5 + 1, 5);
        });
        CHECK(determinant(m) == laplace_det(m));
    }
}

TEST_CASE("dimension and ring mismatches are rejected") {
    Rng rng(0xabc8);
    const SquareMatrix a = random_int_matrix(rng, 2);
    const SquareMatrix b = random_int_matrix(rng, 3);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
    const SquareMatrix fp(2, [](int, int) { return RingValue::prime_field(1, 5); });
    CHECK_THROWS_AS(a * fp, RingMismatch);
    CHECK_THROWS_AS(a.direct_sum(fp), RingMismatch);
    CHECK_THROWS_AS(
        SquareMatrix::from_rows({{Z(1), RingValue::prime_field(1, 5)}, {Z(0), Z(1)}}),
        RingMismatch);
}

TEST_CASE("powers, including the empty power") {
    Rng rng(0xabc9);
    const SquareMatrix m = random_int_matrix(rng, 3);
    CHECK(m.pow(0) == SquareMatrix::identity(3, Z(0)));
    CHECK(m.pow(1) == m);
    CHECK(m.pow(4) == m * m * m * m);
}
