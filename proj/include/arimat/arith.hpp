#pragma once

#include <map>
#include <string>
#include <vector>

#include "arimat/matroid.hpp"

namespace arimat {

/// Finitely generated ambient group Z^r ⊕ Z/q_1 ⊕ ... ⊕ Z/q_n; the torsion
/// factors must form a divisibility chain.
struct AmbientGroup {
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    AmbientGroup() = default;
    AmbientGroup(int free_rank, std::vector<mpz_class> torsion);

    int dim() const { return free_rank + static_cast<int>(torsion.size()); }
    mpz_class torsion_order() const;
};

/// List of elements of an ambient group: columns of height dim(), torsion
/// coordinates last (reduced modulo their factor).
struct Representation {
    AmbientGroup ambient;
    IntMatrix columns;

    Representation() = default;
    Representation(AmbientGroup g, IntMatrix cols);

    int ground_size() const { return static_cast<int>(columns.cols()); }
    /// Free coordinates only (the projection to the lattice G/G_t).
    IntMatrix free_part() const;
    /// Columns indexed by A together with the torsion relation columns;
    /// its index in its own saturation is the multiplicity of A.
    IntMatrix lifted_columns(Subset a) const;
    Matroid matroid() const;
};

/// Multiplicity function, defined on all of 2^E ("total") or only on the
/// independence complex ("partial"); every value is >= 1.
struct Multiplicity {
    bool total = false;
    std::map<Subset, mpz_class> values;

    mpz_class at(Subset s) const;
    static Multiplicity constant_one(int ground_size);
};

mpz_class multiplicity_from_representation(const Representation& rep, Subset a);
Multiplicity total_multiplicity(const Representation& rep);

/// Full bivariate arithmetic Tutte polynomial; requires a total multiplicity.
IntPolynomial2 arithmetic_tutte(const Matroid& m, const Multiplicity& mult);
/// The y = 1 specialization; only independent sets contribute, so a partial
/// multiplicity suffices.
IntPolynomial arithmetic_tutte_x(const Matroid& m, const Multiplicity& mult);

struct Molecule {
    Subset R = 0, S = 0, F = 0, T = 0;
};

/// All pairs R ⊆ S whose interval [R,S] satisfies
/// rank(A) = rank(R) + |A ∩ F| throughout, with
/// F = {e in S∖R : rank(R ∪ {e}) = rank(R) + 1}.
std::vector<Molecule> find_molecules(const Matroid& m);

struct AxiomViolation {
    std::string axiom; // "P", "A1" or "A2"
    std::vector<Subset> sets;
    std::string detail;
};

struct AxiomReport {
    bool holds_P = true;
    bool holds_A1 = true;
    bool holds_A2 = true;
    std::vector<AxiomViolation> violations;

    bool all() const { return holds_P && holds_A1 && holds_A2; }
    std::string to_string() const;
};

/// Requires a total multiplicity.
AxiomReport check_axioms(const Matroid& m, const Multiplicity& mult);

/// m(S) | m(S ∪ {x}) for every independent S and extension x keeping
/// S ∪ {x} independent.
bool validate_weak(const Matroid& m, const Multiplicity& mult);

} // namespace arimat
