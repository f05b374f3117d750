#include <doctest.h>

#include <set>

#include "arimat/abelian.hpp"
#include "arimat/errors.hpp"
#include "test_support.hpp"

using namespace arimat;

TEST_CASE("group normalization and element enumeration") {
    FinAbGroup trivial = FinAbGroup::trivial();
    CHECK(trivial.order() == 1);
    CHECK(trivial.elements().size() == 1);
    CHECK(trivial.elements()[0].coords.empty());

    FinAbGroup z2 = FinAbGroup::cyclic(2);
    auto elems = z2.elements();
    REQUIRE(elems.size() == 2);
    CHECK(elems[0].coords[0] == 0);
    CHECK(elems[1].coords[0] == 1);

    FinAbGroup g({1, 2, 4}); // the 1 is normalized away
    CHECK(g.generator_count() == 2);
    CHECK(g.order() == 8);
    auto all = g.elements();
    REQUIRE(all.size() == 8);
    // Lexicographic: (0,0), (0,1), ..., (1,3).
    CHECK(all[0].coords == std::vector<mpz_class>{0, 0});
    CHECK(all[3].coords == std::vector<mpz_class>{0, 3});
    CHECK(all[4].coords == std::vector<mpz_class>{1, 0});
    for (unsigned long i = 0; i < 8; ++i)
        CHECK(g.element_index(g.element_at(i)) == i);

    CHECK_THROWS_AS(FinAbGroup({2, 3}), std::invalid_argument);
}

TEST_CASE("hom well-definedness") {
    FinAbGroup z8 = FinAbGroup::cyclic(8);
    FinAbGroup z2 = FinAbGroup::cyclic(2);
    FinAbGroup z3 = FinAbGroup::cyclic(3);

    GroupHom h = GroupHom::from_generator_images(z8, z2, {z2.reduce({1})});
    CHECK(h.apply(z8.reduce({5})).coords[0] == 1);
    CHECK(h.is_surjective());

    CHECK_THROWS_AS(GroupHom::from_generator_images(z3, z2, {z2.reduce({1})}),
                    IllDefinedHomError);

    GroupHom id = GroupHom::identity(z2);
    CHECK(id.is_surjective());
    GroupHom zero = GroupHom::zero(z2, z2);
    CHECK_FALSE(zero.is_surjective());
}

TEST_CASE("kernels") {
    FinAbGroup z8 = FinAbGroup::cyclic(8);
    FinAbGroup z2 = FinAbGroup::cyclic(2);

    SUBCASE("kernel of identity is trivial") {
        auto [k, embed] = GroupHom::identity(z2).kernel();
        CHECK(k.order() == 1);
        CHECK(embed.domain() == k);
    }
    SUBCASE("kernel of Z/8 -> Z/2 is Z/4") {
        GroupHom h = GroupHom::from_generator_images(z8, z2, {z2.reduce({1})});
        auto [k, embed] = h.kernel();
        CHECK(k == FinAbGroup::cyclic(4));
        // Brute force: the embedding must hit exactly the vanishing set.
        std::set<std::vector<mpz_class>> expected;
        for (const GroupElem& x : z8.elements())
            if (h.apply(x) == z2.identity()) expected.insert(x.coords);
        std::set<std::vector<mpz_class>> got;
        for (const GroupElem& x : k.elements()) got.insert(embed.apply(x).coords);
        CHECK(got == expected);
        CHECK(got.size() == 4);
    }
    SUBCASE("kernel of the zero map is everything") {
        GroupHom h = GroupHom::zero(z8, z2);
        auto [k, embed] = h.kernel();
        CHECK(k == z8);
    }
}

TEST_CASE("kernel and image orders multiply to the domain order") {
    testsupport::Rng rng(99);
    std::uniform_int_distribution<int> fdist(1, 8);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int d1 = fdist(rng);
        int mult = std::uniform_int_distribution<int>(1, 4)(rng);
        FinAbGroup dom({d1, d1 * mult});
        FinAbGroup cod({fdist(rng)});
        if (dom.order() > 64) continue;
        std::vector<GroupElem> images;
        for (std::size_t i = 0; i < dom.generator_count(); ++i) {
            std::vector<mpz_class> c(cod.generator_count());
            for (auto& v : c) v = fdist(rng);
            images.push_back(cod.reduce(c));
        }
        try {
            GroupHom h = GroupHom::from_generator_images(dom, cod, images);
            auto [k, embed] = h.kernel();
            CHECK(k.order() * h.image_order() == dom.order());
            std::set<std::vector<mpz_class>> img;
            for (const GroupElem& x : dom.elements()) img.insert(h.apply(x).coords);
            CHECK(mpz_class(static_cast<unsigned long>(img.size())) == h.image_order());
            ++checked;
        } catch (const IllDefinedHomError&) {
            continue;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("lattice quotients") {
    SUBCASE("saturation of (2,2) over the (2,2) line is Z/2") {
        IntMatrix sub{{2}, {2}};
        LatticeQuotient q = quotient_group(saturate(sub), sub);
        CHECK(q.group == FinAbGroup::cyclic(2));
        CHECK(q.map_vector({mpz_class(1), mpz_class(1)}).coords[0] == 1);
        CHECK(q.map_vector({mpz_class(2), mpz_class(2)}).coords[0] == 0);
    }
    SUBCASE("Z^2 over the running example has order 8 and separates the table") {
        IntMatrix sub{{2, 2}, {-2, 2}}; // columns (2,-2), (2,2)
        LatticeQuotient q = quotient_group(IntMatrix::identity(2), sub);
        CHECK(q.group.order() == 8);
        std::set<std::vector<mpz_class>> seen;
        std::vector<std::vector<long>> pts = {{0, 0}, {-1, 1}, {0, 1}, {1, 1},
                                              {-1, 2}, {0, 2}, {1, 2}, {0, 3}};
        for (const auto& p : pts)
            seen.insert(q.map_vector({mpz_class(p[0]), mpz_class(p[1])}).coords);
        CHECK(seen.size() == 8);
    }
    SUBCASE("quotient by itself is trivial") {
        IntMatrix a{{3, 1}, {0, 2}};
        LatticeQuotient q = quotient_group(a, a);
        CHECK(q.group.is_trivial());
    }
    SUBCASE("lower-rank sublattice is rejected") {
        IntMatrix sub{{1}, {0}};
        CHECK_THROWS_AS(quotient_group(IntMatrix::identity(2), sub),
                        InfiniteQuotientError);
    }
    SUBCASE("coordinate map is additive and lift is a section") {
        testsupport::Rng rng(123);
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix sub = testsupport::random_matrix(rng, 3, 3, -5, 5);
            if (determinant(sub) == 0) continue;
            LatticeQuotient q = quotient_group(IntMatrix::identity(3), sub);
            IntMatrix vecs = testsupport::random_matrix(rng, 3, 2, -20, 20);
            auto u = vecs.column(0);
            auto v = vecs.column(1);
            std::vector<mpz_class> sum(3);
            for (int i = 0; i < 3; ++i) sum[i] = u[i] + v[i];
            CHECK(q.map_vector(sum) == q.group.add(q.map_vector(u), q.map_vector(v)));
            GroupElem e = q.map_vector(u);
            CHECK(q.map_vector(q.lift(e)) == e);
        }
    }
}

TEST_CASE("hom composition is evaluation in sequence") {
    testsupport::Rng rng(2718);
    std::uniform_int_distribution<int> fdist(1, 6);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        FinAbGroup a({fdist(rng) * 2});
        FinAbGroup b({fdist(rng)});
        FinAbGroup c({fdist(rng)});
        if (a.order() > 64) continue;
        try {
            std::vector<GroupElem> i1, i2;
            for (std::size_t i = 0; i < a.generator_count(); ++i)
                i1.push_back(b.reduce(std::vector<mpz_class>(b.generator_count(),
                                                             mpz_class(fdist(rng)))));
            for (std::size_t i = 0; i < b.generator_count(); ++i)
                i2.push_back(c.reduce(std::vector<mpz_class>(c.generator_count(),
                                                             mpz_class(fdist(rng)))));
            GroupHom h1 = GroupHom::from_generator_images(a, b, i1);
            GroupHom h2 = GroupHom::from_generator_images(b, c, i2);
            GroupHom comp = h2.compose_after(h1);
            for (const GroupElem& x : a.elements())
                CHECK(comp.apply(x) == h2.apply(h1.apply(x)));
            ++checked;
        } catch (const IllDefinedHomError&) {
            continue;
        }
    }
    CHECK(checked > 5);
}
