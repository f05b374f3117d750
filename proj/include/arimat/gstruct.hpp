#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arimat/abelian.hpp"
#include "arimat/arith.hpp"
#include "arimat/matroid.hpp"

namespace arimat {

/// Assignment of a finite abelian group to every face of a simplicial
/// complex together with one-element-deletion projection maps. Factory
/// functions produce valid structures; validate_structure checks the
/// surjectivity and commuting-square conditions on anything, including
/// hand-built assignments.
struct GroupStructure {
    SimplicialComplex complex;
    std::vector<FinAbGroup> groups; // parallel to complex.faces
    // (face index of T, deleted element a) -> hom G(T) -> G(T \ {a})
    std::map<std::pair<int, int>, GroupHom> proj;

    const FinAbGroup& group_of(Subset s) const;
    const GroupHom& projection(Subset t, int a) const;
    void set_projection(Subset t, int a, GroupHom h);
};

/// Layer-group structure of an integer matrix: G(S) = W(S)/I(S) with the
/// coordinate-forgetting maps pushed to the quotients.
GroupStructure layer_structure(const IntMatrix& X);

/// Layer structure together with the per-face lattice quotients (needed for
/// the parallelepiped relabeling and the projection-table golden tests).
struct LayerData {
    GroupStructure structure;
    IntMatrix X;
    std::vector<LatticeQuotient> quotients; // parallel to complex.faces
};

LayerData layer_data(const IntMatrix& X);

/// Cyclic structure of a weak quasi-arithmetic matroid: G(S) = Z/m(S) with
/// the 1 -> 1 projections. Throws NotWeaklyArithmeticError.
GroupStructure cyclic_structure(const Matroid& m, const Multiplicity& mult);

struct StructureIssue {
    enum class Kind { NotSurjective, SquareMismatch };
    Kind kind;
    Subset S = 0; // base face of the square, or T \ {a} for surjectivity
    int a = 0, b = 0;
    std::string detail;

    std::string to_string() const;
};

struct StructureReport {
    bool ok = true;
    std::vector<StructureIssue> issues;
};

StructureReport validate_structure(const GroupStructure& g);

/// Composite projection G(S) -> G(∅) along any deletion order (the squares
/// commute, so the order is immaterial).
GroupHom composite_projection(const GroupStructure& g, Subset s);
GroupElem pi_S(const GroupStructure& g, Subset s, const GroupElem& x);

/// Torsion-free reduction: replaces each G(S) by the kernel of the composite
/// projection to G(∅), with the restricted maps.
GroupStructure torsion_free_reduction(const GroupStructure& g);

/// Lattice points of the half-open parallelepiped spanned by the columns of
/// X[S] (S independent), computed by reducing lifted quotient representatives.
std::vector<std::vector<mpz_class>> parallelepiped_representatives(const IntMatrix& X,
                                                                   Subset s);

/// The parallelepiped point representing a canonical layer-group element.
/// Defined when |S| equals the number of rows of X and the column lattice of
/// X[S] equals I(S) (true for the symmetric golden fixture); throws otherwise.
std::vector<mpz_class> parallelepiped_label(const LayerData& data, Subset s,
                                            const GroupElem& e);

} // namespace arimat
