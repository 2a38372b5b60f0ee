#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rinf/errors.hpp"
#include "rinf/finite_group.hpp"

using namespace rinf;

namespace {

SquareMatrix fp_matrix(std::uint64_t p, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<RingValue>> out;
    for (const auto& r : rows) {
        std::vector<RingValue> row;
        for (long v : r) row.push_back(RingValue::prime_field(v, p));
        out.push_back(std::move(row));
    }
    return SquareMatrix::from_rows(out);
}

std::vector<SquareMatrix> sl2_gens(std::uint64_t p) {
    return {fp_matrix(p, {{1, 1}, {0, 1}}), fp_matrix(p, {{0, 1}, {-1, 0}})};
}

// Ordinary conjugacy classes by direct enumeration; the oracle for phi = id.
std::vector<std::set<std::size_t>> plain_conjugacy_classes(const FiniteGroupTable& g) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::set<std::size_t>> classes;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (seen[x]) continue;
        std::set<std::size_t> cls;
        for (std::size_t z = 0; z < g.size(); ++z)
            cls.insert(g.product(g.product(z, x), g.inverse(z)));
        for (std::size_t y : cls) seen[y] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace

TEST_CASE("closure enumeration: SL2 over F2 and F3, trivial group") {
    const FiniteGroupTable g2 = FiniteGroupTable::generate(sl2_gens(2));
    CHECK(g2.size() == 6);
    const FiniteGroupTable g3 = FiniteGroupTable::generate(sl2_gens(3));
    CHECK(g3.size() == 24);

    const FiniteGroupTable trivial =
        FiniteGroupTable::generate({fp_matrix(5, {{1, 0}, {0, 1}})});
    CHECK(trivial.size() == 1);

    CHECK_THROWS_AS(FiniteGroupTable::generate(sl2_gens(3), 10), CapExceeded);
    CHECK_THROWS_AS(FiniteGroupTable::generate({fp_matrix(3, {{1, 1}, {1, 1}})}), NotInvertible);
    CHECK_THROWS_AS(FiniteGroupTable::generate(
                        {fp_matrix(3, {{1, 0}, {0, 1}}), fp_matrix(5, {{1, 0}, {0, 1}})}),
                    RingMismatch);
}

TEST_CASE("closure is a group and enumeration is deterministic") {
    const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(3));
    for (std::size_t a = 0; a < g.size(); ++a) {
        CHECK(g.product(a, g.inverse(a)) == g.identity_index());
        CHECK(g.product(g.inverse(a), a) == g.identity_index());
    }
    const FiniteGroupTable h = FiniteGroupTable::generate(sl2_gens(3));
    for (std::size_t a = 0; a < g.size(); ++a) CHECK(g.element(a) == h.element(a));
}

TEST_CASE("twisted classes with the identity reduce to ordinary conjugacy") {
    for (std::uint64_t p : {2ULL, 3ULL}) {
        const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(p));
        const auto twisted = twisted_classes(g, FiniteAutomorphism::identity(g));
        const auto plain = plain_conjugacy_classes(g);
        REQUIRE(twisted.size() == plain.size());
        for (std::size_t i = 0; i < twisted.size(); ++i)
            CHECK(std::set<std::size_t>(twisted[i].begin(), twisted[i].end()) == plain[i]);
    }
}

TEST_CASE("Reidemeister numbers of the small symplectic groups") {
    const FiniteGroupTable g2 = FiniteGroupTable::generate(sl2_gens(2));
    CHECK(reidemeister_number(g2, FiniteAutomorphism::identity(g2)) == 3);
    const FiniteGroupTable g3 = FiniteGroupTable::generate(sl2_gens(3));
    CHECK(reidemeister_number(g3, FiniteAutomorphism::identity(g3)) == 7);

    const FiniteGroupTable trivial =
        FiniteGroupTable::generate({fp_matrix(5, {{1, 0}, {0, 1}})});
    CHECK(reidemeister_number(trivial, FiniteAutomorphism::identity(trivial)) == 1);
}

TEST_CASE("in abelian groups with phi = id every element is its own class") {
    const FiniteGroupTable cyclic =
        FiniteGroupTable::generate({fp_matrix(7, {{1, 1}, {0, 1}})});
    CHECK(cyclic.size() == 7);
    const auto classes = twisted_classes(cyclic, FiniteAutomorphism::identity(cyclic));
    CHECK(classes.size() == cyclic.size());
    for (const auto& cls : classes) CHECK(cls.size() == 1);
}

TEST_CASE("twisted classes partition the group") {
    const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(3));
    const auto classes = twisted_classes(g, FiniteAutomorphism::inner(g, 2));
    std::set<std::size_t> all;
    std::size_t total = 0;
    for (const auto& cls : classes) {
        CHECK(!cls.empty());
        total += cls.size();
        all.insert(cls.begin(), cls.end());
    }
    CHECK(total == g.size());
    CHECK(all.size() == g.size());
}

TEST_CASE("the class of the identity is { z phi(z)^-1 }") {
    const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(3));
    for (std::size_t h : {std::size_t(0), std::size_t(3)}) {
        const FiniteAutomorphism phi = FiniteAutomorphism::inner(g, h);
        const auto classes = twisted_classes(g, phi);
        std::set<std::size_t> expected;
        for (std::size_t z = 0; z < g.size(); ++z)
            expected.insert(g.product(z, g.inverse(phi.apply(z))));
        bool found = false;
        for (const auto& cls : classes) {
            if (std::find(cls.begin(), cls.end(), g.identity_index()) == cls.end()) continue;
            found = true;
            CHECK(std::set<std::size_t>(cls.begin(), cls.end()) == expected);
        }
        CHECK(found);
    }
}

TEST_CASE("inner twists never change the Reidemeister number") {
    // exhaustive over every conjugator, on groups up to order 120
    const std::size_t expected[] = {0, 0, 3, 7, 0, 9};
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(p));
        const auto rep = check_inner_invariance(g, FiniteAutomorphism::identity(g));
        CHECK(rep.all_equal);
        CHECK(rep.base_reidemeister == expected[p]);
        CHECK(rep.violating_elements.empty());
    }

    const FiniteGroupTable trivial =
        FiniteGroupTable::generate({fp_matrix(5, {{1, 0}, {0, 1}})});
    const auto rep = check_inner_invariance(trivial, FiniteAutomorphism::identity(trivial));
    CHECK(rep.all_equal);
    CHECK(rep.base_reidemeister == 1);
}

TEST_CASE("entrywise p-th power is the identity over the prime field") {
    const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(3));
    const FiniteAutomorphism frob = FiniteAutomorphism::frobenius(g);
    CHECK(frob.images() == FiniteAutomorphism::identity(g).images());
}

TEST_CASE("automorphisms from generator images") {
    const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(3));
    // conjugation expressed through its action on the generators
    const std::size_t h = 5;
    const SquareMatrix hm = g.element(h), hi = g.element(g.inverse(h));
    const FiniteAutomorphism via_images = FiniteAutomorphism::from_generator_images(
        g, {hm * g.element(g.generators()[0]) * hi, hm * g.element(g.generators()[1]) * hi});
    CHECK(via_images.images() == FiniteAutomorphism::inner(g, h).images());

    // swapping the generator images is impossible: they have different orders
    CHECK_THROWS_AS(FiniteAutomorphism::from_generator_images(
                        g, {g.element(g.generators()[1]), g.element(g.generators()[0])}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        FiniteAutomorphism::from_generator_images(g, {fp_matrix(3, {{1, 2}, {1, 1}})}),
        std::invalid_argument);
}

TEST_CASE("quotient lemma on SL2(F3) by its center") {
    const FiniteGroupTable g = FiniteGroupTable::generate(sl2_gens(3));
    std::vector<std::size_t> center;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.element(i).is_identity() || (-g.element(i)).is_identity()) center.push_back(i);
    REQUIRE(center.size() == 2);

    const auto rep = check_quotient_lemma(g, center, FiniteAutomorphism::identity(g));
    CHECK(rep.r_group == 7);
    CHECK(rep.r_quotient == 4);
    CHECK(rep.quotient_order == 12);
    CHECK(rep.holds);

    // trivial subgroup: quotient is the group itself
    const auto triv = check_quotient_lemma(g, {g.identity_index()},
                                           FiniteAutomorphism::identity(g));
    CHECK(triv.r_group == triv.r_quotient);

    // a non-normal subgroup is rejected: the one generated by [[1,1],[0,1]]
    const std::size_t t = *g.index_of(fp_matrix(3, {{1, 1}, {0, 1}}));
    const std::size_t t2 = g.product(t, t);
    CHECK_THROWS_AS(
        check_quotient_lemma(g, {g.identity_index(), t, t2}, FiniteAutomorphism::identity(g)),
        std::invalid_argument);
}

TEST_CASE("a normal subgroup not preserved by phi is flagged") {
    // Klein four group as diagonal sign matrices over F3
    const FiniteGroupTable v4 = FiniteGroupTable::generate(
        {fp_matrix(3, {{-1, 0}, {0, 1}}), fp_matrix(3, {{1, 0}, {0, -1}})});
    REQUIRE(v4.size() == 4);
    // the automorphism swapping the two generators
    const FiniteAutomorphism swap = FiniteAutomorphism::from_generator_images(
        v4, {fp_matrix(3, {{1, 0}, {0, -1}}), fp_matrix(3, {{-1, 0}, {0, 1}})});
    const std::size_t a = *v4.index_of(fp_matrix(3, {{-1, 0}, {0, 1}}));
    CHECK_THROWS_AS(check_quotient_lemma(v4, {v4.identity_index(), a}, swap),
                    NotCharacteristic);
}
