#pragma once

#include <optional>
#include <vector>

#include "arimat/int_matrix.hpp"

namespace arimat {

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each
/// diagonal entry dividing the next.
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SnfDecomposition smith_normal_form(const IntMatrix& A);

/// Canonical column-style Hermite normal form: unimodular column operations
/// only, zero columns dropped. Pivots are positive with strictly increasing
/// pivot rows; entries left of a pivot in its row are reduced into [0, pivot).
/// Two column lattices are equal iff their HNFs are equal.
IntMatrix hermite_normal_form(const IntMatrix& A);

/// Basis (canonical HNF, n x rank) of (R-span of columns of L) ∩ Z^n.
IntMatrix saturate(const IntMatrix& L);

/// Rank over Q.
int integer_rank(const IntMatrix& A);

/// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntMatrix& A);

/// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& U);

/// Particular rational solution of A x = b (free variables set to 0), or
/// nullopt if the system is inconsistent.
std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& A,
                                                     const std::vector<mpz_class>& b);

/// Integer solution of A x = b, or nullopt if none exists. Meaningful as a
/// membership test when the columns of A are linearly independent.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& A,
                                                    const std::vector<mpz_class>& b);

/// Whether v lies in the lattice generated by the columns of `basis`
/// (columns assumed linearly independent).
bool lattice_contains(const IntMatrix& basis, const std::vector<mpz_class>& v);

/// Index of the column lattice of L inside its saturation: the product of
/// the nonzero Smith diagonal entries.
mpz_class lattice_index_in_saturation(const IntMatrix& L);

/// Basis (columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& A);

} // namespace arimat
