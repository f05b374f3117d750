#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "arimat/int_matrix.hpp"
#include "arimat/polynomial.hpp"
#include "arimat/subset.hpp"

namespace arimat {

/// Simplicial complex on {1..N}, faces listed by increasing cardinality and
/// lexicographically within a cardinality.
struct SimplicialComplex {
    int ground_size = 0;
    std::vector<Subset> faces;

    int rank() const;
    bool contains(Subset s) const;
    /// Position in `faces`, or -1.
    int index_of(Subset s) const;
    /// f_i = number of faces of cardinality i, i = 0..rank.
    std::vector<mpz_class> f_vector() const;
};

IntPolynomial f_polynomial(const SimplicialComplex& complex);
IntPolynomial h_polynomial(const SimplicialComplex& complex);

/// Matroid on {1..N} with a rank oracle, backed either by an integer matrix
/// representation (trusted) or an explicit independence family (validated
/// against all three axioms on construction).
class Matroid {
public:
    static Matroid from_columns(const IntMatrix& X);
    static Matroid from_family(int ground_size, const std::vector<Subset>& independent);

    int ground_size() const { return n_; }
    bool is_independent(Subset s) const;
    int rank(Subset a) const;
    int rank() const { return rank((Subset{1} << n_) - 1); }

    /// The independence complex, enumerated front to back.
    const SimplicialComplex& complex() const;

    /// Minors on the ground set with element e removed; remaining elements
    /// are relabeled 1..N-1 preserving order. Test utilities for the
    /// deletion-contraction identity.
    Matroid deleted(int e) const;
    Matroid contracted(int e) const;

private:
    Matroid() = default;
    int n_ = 0;
    std::optional<IntMatrix> rep_;
    std::set<Subset> family_;
    mutable std::map<Subset, int> rank_cache_;
    mutable std::optional<SimplicialComplex> complex_cache_;
};

IntPolynomial2 tutte(const Matroid& m);

} // namespace arimat
