#include <doctest.h>

#include "arimat/arith.hpp"
#include "arimat/errors.hpp"
#include "test_support.hpp"

using namespace arimat;

namespace {

Representation example31() {
    return Representation(AmbientGroup(2, {}),
                          IntMatrix::from_columns(2, {{2, 2}, {-2, 2}}));
}

Representation final_remark() {
    return Representation(AmbientGroup(1, {3}),
                          IntMatrix::from_columns(2, {{2, 0}, {3, 0}}));
}

Multiplicity example33_multiplicity() {
    Multiplicity m;
    m.total = true;
    m.values[0u] = 1;
    m.values[1u] = 2;
    m.values[2u] = 2;
    m.values[3u] = 2;
    return m;
}

} // namespace

TEST_CASE("multiplicities from representations") {
    SUBCASE("running example") {
        Representation rep = example31();
        CHECK(multiplicity_from_representation(rep, 0u) == 1);
        CHECK(multiplicity_from_representation(rep, 1u) == 2);
        CHECK(multiplicity_from_representation(rep, 2u) == 2);
        CHECK(multiplicity_from_representation(rep, 3u) == 8);
    }
    SUBCASE("torsion ambient group") {
        Representation rep = final_remark();
        CHECK(multiplicity_from_representation(rep, 0u) == 3);
        CHECK(multiplicity_from_representation(rep, 1u) == 6);
        CHECK(multiplicity_from_representation(rep, 2u) == 9);
        CHECK(multiplicity_from_representation(rep, 3u) == 3);
    }
    SUBCASE("unimodular representation has constant multiplicity") {
        Representation rep(AmbientGroup(2, {}), IntMatrix::identity(2));
        for (Subset a = 0; a < 4; ++a)
            CHECK(multiplicity_from_representation(rep, a) == 1);
    }
    SUBCASE("independent sets gain a torsion factor") {
        testsupport::Rng rng(404);
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<mpz_class> torsion = {mpz_class(2), mpz_class(4)};
            IntMatrix cols = testsupport::random_matrix(rng, 4, 3, -3, 3);
            Representation rep(AmbientGroup(2, torsion), cols);
            Representation bare(AmbientGroup(2, {}), rep.free_part());
            Matroid m = rep.matroid();
            for (Subset s : m.complex().faces)
                CHECK(multiplicity_from_representation(rep, s) ==
                      multiplicity_from_representation(bare, s) * 8);
        }
    }
}

TEST_CASE("arithmetic Tutte polynomials") {
    SUBCASE("running example") {
        Representation rep = example31();
        IntPolynomial2 t = arithmetic_tutte(rep.matroid(), total_multiplicity(rep));
        CHECK(t.to_string("x", "y") == "x^2 + 2*x + 5");
    }
    SUBCASE("final remark") {
        Representation rep = final_remark();
        IntPolynomial2 t = arithmetic_tutte(rep.matroid(), total_multiplicity(rep));
        CHECK(t.to_string("x", "y") == "3*x + 3*y + 9");
    }
    SUBCASE("negative h-vector example") {
        Matroid m = Matroid::from_family(2, {0u, 1u, 2u, 3u});
        IntPolynomial2 t = arithmetic_tutte(m, example33_multiplicity());
        CHECK(t.to_string("x", "y") == "x^2 + 2*x - 1");
    }
    SUBCASE("partial multiplicity only offers the y=1 slice") {
        Matroid m = Matroid::from_family(2, {0u, 1u, 2u});
        Multiplicity mult;
        mult.total = false;
        mult.values[0u] = 1;
        mult.values[1u] = 2;
        mult.values[2u] = 2;
        CHECK_THROWS_AS(arithmetic_tutte(m, mult), PartialMultiplicityError);
        IntPolynomial p = arithmetic_tutte_x(m, mult);
        // (t-1) + 2 + 2 = t + 3
        CHECK(p.coeff(1) == 1);
        CHECK(p.coeff(0) == 3);
    }
    SUBCASE("the y=1 slice matches the independent-set sum route") {
        testsupport::Rng rng(606);
        for (int trial = 0; trial < 20; ++trial) {
            IntMatrix x = testsupport::random_matrix(rng, 2, 4, -3, 3);
            Representation rep(AmbientGroup(2, {}), x);
            Matroid m = rep.matroid();
            Multiplicity mult = total_multiplicity(rep);
            CHECK(arithmetic_tutte(m, mult).at_y(1) == arithmetic_tutte_x(m, mult));
        }
    }
    SUBCASE("totally unimodular collapse to the Tutte polynomial") {
        testsupport::Rng rng(808);
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix x = testsupport::random_graphic_matrix(rng, 3, 4);
            Representation rep(AmbientGroup(3, {}), x);
            CHECK(arithmetic_tutte(rep.matroid(), total_multiplicity(rep)) ==
                  tutte(rep.matroid()));
        }
        Representation id(AmbientGroup(2, {}), IntMatrix::identity(2));
        CHECK(arithmetic_tutte(id.matroid(), total_multiplicity(id)) ==
              tutte(id.matroid()));
    }
}

TEST_CASE("molecules") {
    SUBCASE("R = S is always a molecule with empty F and T") {
        Matroid m = Matroid::from_columns(IntMatrix{{1, 1}});
        auto molecules = find_molecules(m);
        for (Subset s = 0; s < 4; ++s) {
            bool found = false;
            for (const Molecule& mol : molecules)
                if (mol.R == s && mol.S == s && mol.F == 0 && mol.T == 0) found = true;
            CHECK(found);
        }
    }
    SUBCASE("every pair is a molecule for U_{2,2}") {
        Matroid m = Matroid::from_columns(IntMatrix{{2, -2}, {2, 2}});
        CHECK(find_molecules(m).size() == 9); // all R subseteq S pairs
    }
    SUBCASE("parallel elements give |F| = 1, |T| = 1") {
        Matroid m = Matroid::from_columns(IntMatrix{{2, 3}});
        bool found = false;
        for (const Molecule& mol : find_molecules(m))
            if (mol.R == 0u && mol.S == 3u) {
                found = true;
                CHECK(subset_size(mol.F) == 1);
                CHECK(subset_size(mol.T) == 1);
            }
        CHECK(found);
    }
}

TEST_CASE("axiom checker") {
    SUBCASE("representable inputs satisfy all axioms") {
        testsupport::Rng rng(909);
        std::uniform_int_distribution<std::size_t> rdist(1, 3), ndist(1, 5);
        for (int trial = 0; trial < 20; ++trial) {
            IntMatrix x = testsupport::random_matrix(rng, rdist(rng), ndist(rng), -4, 4);
            Representation rep(AmbientGroup(static_cast<int>(x.rows()), {}), x);
            AxiomReport report = check_axioms(rep.matroid(), total_multiplicity(rep));
            CAPTURE(x.to_string());
            CHECK(report.all());
        }
    }
    SUBCASE("the negative h-vector example fails (P) only") {
        Matroid m = Matroid::from_family(2, {0u, 1u, 2u, 3u});
        AxiomReport report = check_axioms(m, example33_multiplicity());
        CHECK_FALSE(report.holds_P);
        CHECK(report.holds_A1);
        CHECK(report.holds_A2);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].axiom == "P");
        CHECK(report.violations[0].sets[0] == 0u);
        CHECK(report.violations[0].sets[1] == 3u);
        CHECK(report.violations[0].detail == "rho = -1");
    }
    SUBCASE("constant multiplicity is arithmetic") {
        Matroid m = Matroid::from_columns(IntMatrix{{1, 1, 0}, {0, 1, 1}});
        CHECK(check_axioms(m, Multiplicity::constant_one(3)).all());
    }
}

TEST_CASE("weak quasi-arithmetic validation") {
    Matroid u22 = Matroid::from_family(2, {0u, 1u, 2u, 3u});
    SUBCASE("running example and the negative-h example pass") {
        Representation rep = example31();
        CHECK(validate_weak(rep.matroid(), total_multiplicity(rep)));
        CHECK(validate_weak(u22, example33_multiplicity()));
    }
    SUBCASE("divisibility failure is caught") {
        Matroid u11 = Matroid::from_family(1, {0u, 1u});
        Multiplicity mult;
        mult.total = true;
        mult.values[0u] = 2;
        mult.values[1u] = 3;
        CHECK_FALSE(validate_weak(u11, mult));
    }
}
