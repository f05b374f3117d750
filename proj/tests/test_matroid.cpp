#include <doctest.h>

#include "arimat/errors.hpp"
#include "arimat/matroid.hpp"
#include "test_support.hpp"

using namespace arimat;

TEST_CASE("matroids from columns") {
    SUBCASE("uniform U_{2,2}") {
        Matroid m = Matroid::from_columns(IntMatrix{{2, -2}, {2, 2}});
        CHECK(m.complex().faces == std::vector<Subset>{0u, 1u, 2u, 3u});
        CHECK(m.rank(3u) == 2);
        CHECK(m.rank(0u) == 0);
    }
    SUBCASE("rank one with two parallel elements") {
        Matroid m = Matroid::from_columns(IntMatrix{{2, 3}});
        CHECK(m.complex().faces == std::vector<Subset>{0u, 1u, 2u});
        CHECK(m.rank(3u) == 1);
    }
    SUBCASE("zero column is a loop") {
        Matroid m = Matroid::from_columns(IntMatrix{{1, 0}, {0, 0}});
        CHECK_FALSE(m.is_independent(2u));
        CHECK(m.is_independent(1u));
    }
}

TEST_CASE("explicit families are validated") {
    CHECK_THROWS_AS(Matroid::from_family(2, {1u, 2u}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::from_family(2, {0u, 3u}), std::invalid_argument);
    // {1},{2} independent but {1,2} not, plus a third parallel element is
    // fine as long as exchange holds.
    CHECK_NOTHROW(Matroid::from_family(2, {0u, 1u, 2u}));
    // Exchange violation: {1,2} and {3} independent, but {3,e} not.
    CHECK_THROWS_AS(Matroid::from_family(3, {0u, 1u, 2u, 3u, 4u}),
                    std::invalid_argument);
}

TEST_CASE("exchange axiom holds for matrix matroids") {
    testsupport::Rng rng(5150);
    std::uniform_int_distribution<std::size_t> rdist(1, 3), ndist(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix x = testsupport::random_matrix(rng, rdist(rng), ndist(rng), -4, 4);
        Matroid m = Matroid::from_columns(x);
        // Revalidates all axioms, throws on violation.
        CHECK_NOTHROW(Matroid::from_family(m.ground_size(), m.complex().faces));
    }
}

TEST_CASE("tutte polynomials") {
    SUBCASE("single coloop") {
        IntPolynomial2 t = tutte(Matroid::from_columns(IntMatrix{{1}}));
        CHECK(t.coeff(1, 0) == 1);
        CHECK(t.terms().size() == 1);
    }
    SUBCASE("U_{2,2} is x^2 via the subset sum") {
        IntPolynomial2 t = tutte(Matroid::from_columns(IntMatrix{{2, -2}, {2, 2}}));
        CHECK(t.coeff(2, 0) == 1);
        CHECK(t.terms().size() == 1);
    }
    SUBCASE("deletion-contraction on random matroids") {
        testsupport::Rng rng(777);
        int checked = 0;
        for (int trial = 0; trial < 30; ++trial) {
            IntMatrix x = testsupport::random_matrix(rng, 2, 4, -3, 3);
            Matroid m = Matroid::from_columns(x);
            for (int e = 1; e <= m.ground_size(); ++e) {
                bool loop = !m.is_independent(subset_with(0u, e));
                bool coloop =
                    m.rank() != m.deleted(e).rank();
                if (loop || coloop) continue;
                IntPolynomial2 whole = tutte(m);
                IntPolynomial2 del = tutte(m.deleted(e));
                IntPolynomial2 con = tutte(m.contracted(e));
                IntPolynomial2 sum;
                for (const auto& [ij, c] : del.terms()) sum.add_term(ij.first, ij.second, c);
                for (const auto& [ij, c] : con.terms()) sum.add_term(ij.first, ij.second, c);
                CHECK(whole == sum);
                ++checked;
                break;
            }
        }
        CHECK(checked > 10);
    }
}

TEST_CASE("f and h polynomials") {
    SUBCASE("the complex with only the empty face") {
        SimplicialComplex c{1, {0u}};
        CHECK(f_polynomial(c) == IntPolynomial(1));
        CHECK(h_polynomial(c) == IntPolynomial(1));
    }
    SUBCASE("empty complex is rejected") {
        SimplicialComplex c{1, {}};
        CHECK_THROWS_AS(f_polynomial(c), EmptyComplexError);
    }
    SUBCASE("matroid identity f(t) = T(t+1, 1)") {
        Matroid m = Matroid::from_columns(IntMatrix{{2, -2}, {2, 2}});
        IntPolynomial f = f_polynomial(m.complex());
        IntPolynomial expect;
        expect.add_term(2, 1);
        expect.add_term(1, 2);
        expect.add_term(0, 1);
        CHECK(f == expect); // t^2 + 2t + 1
        IntPolynomial via_tutte = tutte(m).at_y(1).shifted_argument(1);
        CHECK(f == via_tutte);
    }
    SUBCASE("f = T(t+1,1) and h = T(t,1) on random matroids") {
        testsupport::Rng rng(31337);
        std::uniform_int_distribution<std::size_t> rdist(1, 3), ndist(1, 5);
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix x = testsupport::random_matrix(rng, rdist(rng), ndist(rng), -3, 3);
            Matroid m = Matroid::from_columns(x);
            IntPolynomial tx1 = tutte(m).at_y(1);
            CHECK(f_polynomial(m.complex()) == tx1.shifted_argument(1));
            CHECK(h_polynomial(m.complex()) == tx1);
        }
    }
}
