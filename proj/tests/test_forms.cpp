#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rinf/errors.hpp"
#include "rinf/forms.hpp"
#include "rinf/witness.hpp"
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

} // namespace

TEST_CASE("form matrices match their block definitions") {
    CHECK(form_matrix({FormTag::SymplecticJ, 1}) == int_matrix({{0, 1}, {-1, 0}}));
    CHECK(form_matrix({FormTag::OrthoD, 2}) ==
          int_matrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(form_matrix({FormTag::OrthoB, 2}) ==
          int_matrix({{1, 0, 0, 0, 0},
                      {0, 0, 0, 1, 0},
                      {0, 0, 0, 0, 1},
                      {0, 1, 0, 0, 0},
                      {0, 0, 1, 0, 0}}));
}

TEST_CASE("form matrix squares") {
    for (int l = 1; l <= 4; ++l) {
        const SquareMatrix j = form_matrix({FormTag::SymplecticJ, l});
        CHECK(j * j == -SquareMatrix::identity(2 * l, Z(0)));
    }
    for (int l = 2; l <= 4; ++l) {
        const SquareMatrix fd = form_matrix({FormTag::OrthoD, l});
        CHECK((fd * fd).is_identity());
        const SquareMatrix fb = form_matrix({FormTag::OrthoB, l});
        CHECK((fb * fb).is_identity());
    }
}

TEST_CASE("rank floors") {
    CHECK_THROWS_AS(form_matrix({FormTag::SymplecticJ, 0}), RankTooSmall);
    CHECK_THROWS_AS(form_matrix({FormTag::OrthoD, 1}), RankTooSmall);
    CHECK_THROWS_AS(form_matrix({FormTag::OrthoB, 1}), RankTooSmall);
}

TEST_CASE("membership of the defining matrices and basic non-members") {
    const FormKind sp2{FormTag::SymplecticJ, 1};
    CHECK(is_member(form_matrix(sp2), sp2)); // J J J^T = J

    for (long x = -2; x <= 2; ++x) {
        const FamilyC fam = family_C(2, Z(x), Z(1));
        CHECK(is_member(fam.x, {FormTag::SymplecticJ, 2}));
    }

    CHECK_FALSE(is_member(int_matrix({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                          {FormTag::SymplecticJ, 2}));
    CHECK_THROWS_AS(is_member(int_matrix({{1, 0}, {0, 1}}), {FormTag::SymplecticJ, 2}),
                    DimensionMismatch);
}

TEST_CASE("membership is closed under products and inverses") {
    Rng rng(0xf0f0);
    const FormKind sp4{FormTag::SymplecticJ, 2};
    std::vector<SquareMatrix> gens;
    for (long x : {-2L, 1L, 3L}) gens.push_back(family_C(2, Z(x), Z(1)).x);
    gens.push_back(form_matrix(sp4)); // J itself is symplectic

    SquareMatrix word = SquareMatrix::identity(4, Z(0));
    for (int step = 0; step < 24; ++step) {
        const auto& g = gens[static_cast<std::size_t>(rng.range(0, 3))];
        word = rng.range(0, 1) ? word * g : word * g.inverse();
        CHECK(is_member(word, sp4));
        CHECK(is_member(word.inverse(), sp4));
    }

    const FormKind od{FormTag::OrthoD, 2};
    SquareMatrix oword = SquareMatrix::identity(4, Z(0));
    for (int step = 0; step < 16; ++step) {
        const long x = rng.nonzero(-3, 3);
        const FamilyD fam = family_D(2, Z(x));
        oword = rng.range(0, 1) ? oword * fam.x : oword * fam.y.inverse();
        CHECK(is_member(oword, od));
    }
}

TEST_CASE("center detection") {
    const FormKind od{FormTag::OrthoD, 2};
    CHECK(center_element_check(SquareMatrix::identity(4, Z(0)), od));
    CHECK(center_element_check(-SquareMatrix::identity(4, Z(0)), od));
    CHECK_FALSE(center_element_check(
        int_matrix({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}), od));
}

TEST_CASE("form-based inverse agrees with the generic inverse") {
    // Symplectic: A^-1 = -J A^T J; orthogonal: A^-1 = [f] A^T [f].
    Rng rng(0xf0f1);
    const FormKind sp4{FormTag::SymplecticJ, 2};
    for (long x = -3; x <= 3; ++x) {
        const SquareMatrix a = family_C(2, Z(x), Z(1)).x;
        CHECK(inverse_via_form(a, sp4) == a.inverse());
    }
    const FormKind od{FormTag::OrthoD, 3};
    const FormKind ob{FormTag::OrthoB, 2};
    for (long x = -3; x <= 3; ++x) {
        if (x == 0) continue;
        const SquareMatrix z = family_D(3, Z(x)).z;
        CHECK(inverse_via_form(z, od) == z.inverse());
        const SquareMatrix zb = family_B(2, Z(x));
        CHECK(inverse_via_form(zb, ob) == zb.inverse());
    }
    // symbolically over Z[T] as well
    const SquareMatrix zt = family_D(2, RingValue::variable_T()).z;
    CHECK(inverse_via_form(zt, {FormTag::OrthoD, 2}) == zt.inverse());

    CHECK_THROWS_AS(inverse_via_form(int_matrix({{2, 0}, {0, 1}}), {FormTag::SymplecticJ, 1}),
                    NotInGroup);
}
