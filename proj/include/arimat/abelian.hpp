#pragma once

#include <utility>
#include <vector>

#include "arimat/exact_linalg.hpp"
#include "arimat/int_matrix.hpp"

namespace arimat {

/// Element of a finite abelian group in invariant-factor coordinates,
/// one entry per factor of the owning group, each reduced into [0, d_i).
struct GroupElem {
    std::vector<mpz_class> coords;

    bool operator==(const GroupElem& o) const { return coords == o.coords; }
    bool operator<(const GroupElem& o) const { return coords < o.coords; }
    std::string to_string() const;
};

/// Finite abelian group in normalized invariant-factor form: factors
/// d_1 | d_2 | ... | d_k, all > 1. The trivial group has no factors.
class FinAbGroup {
public:
    FinAbGroup() = default;
    /// Normalizes: validates d_i >= 1 and the divisibility chain, drops 1s.
    explicit FinAbGroup(std::vector<mpz_class> factors);

    static FinAbGroup trivial() { return FinAbGroup(); }
    static FinAbGroup cyclic(const mpz_class& n);

    const std::vector<mpz_class>& factors() const { return factors_; }
    std::size_t generator_count() const { return factors_.size(); }
    mpz_class order() const;
    bool is_trivial() const { return factors_.empty(); }

    GroupElem identity() const;
    GroupElem reduce(std::vector<mpz_class> coords) const;
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem negate(const GroupElem& a) const;

    /// All elements in lexicographic coordinate order. Refuses to enumerate
    /// groups with more than 2^22 elements.
    std::vector<GroupElem> elements() const;
    GroupElem element_at(unsigned long long index) const;
    unsigned long long element_index(const GroupElem& e) const;
    unsigned long long enumerable_order() const;

    bool operator==(const FinAbGroup& o) const { return factors_ == o.factors_; }

    std::string to_string() const;

private:
    std::vector<mpz_class> factors_;
};

/// Homomorphism between finite abelian groups: an integer matrix applied to
/// invariant-factor coordinates, reduced modulo the codomain's factors.
/// Well-definedness is checked at construction.
class GroupHom {
public:
    GroupHom(FinAbGroup domain, FinAbGroup codomain, IntMatrix action);

    static GroupHom from_generator_images(const FinAbGroup& domain,
                                          const FinAbGroup& codomain,
                                          const std::vector<GroupElem>& images);
    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero(const FinAbGroup& domain, const FinAbGroup& codomain);

    const FinAbGroup& domain() const { return domain_; }
    const FinAbGroup& codomain() const { return codomain_; }
    const IntMatrix& action() const { return action_; }

    GroupElem apply(const GroupElem& x) const;
    /// this ∘ inner (apply inner first).
    GroupHom compose_after(const GroupHom& inner) const;

    mpz_class image_order() const;
    bool is_surjective() const;

    /// Kernel as a group plus the inclusion into the domain.
    std::pair<FinAbGroup, GroupHom> kernel() const;

    /// Same domain/codomain and equal on every domain element.
    bool equal_elementwise(const GroupHom& o) const;

private:
    FinAbGroup domain_;
    FinAbGroup codomain_;
    IntMatrix action_;
};

/// Finite quotient of the lattice generated by the columns of `ambient` by
/// the lattice generated by the columns of `sub`, with the coordinate map
/// and a lift back to representatives.
struct LatticeQuotient {
    FinAbGroup group;
    IntMatrix basis;          // n x a canonical basis of the ambient lattice
    IntMatrix transform;      // U from the Smith form of sub in basis coords
    IntMatrix transform_inv;
    std::vector<mpz_class> diag; // full diagonal, length a, entries >= 1
    std::vector<std::size_t> kept; // positions with diag > 1

    std::size_t ambient_dim() const { return basis.rows(); }
    /// v must lie in the ambient lattice.
    GroupElem map_vector(const std::vector<mpz_class>& v) const;
    /// Representative in Z^n of a group element.
    std::vector<mpz_class> lift(const GroupElem& e) const;
};

/// Throws InfiniteQuotientError when the index is not finite, and
/// std::invalid_argument when sub does not lie inside ambient.
LatticeQuotient quotient_group(const IntMatrix& ambient, const IntMatrix& sub);

/// Kernel of a hom together with the machinery needed to invert the
/// inclusion on kernel elements.
struct KernelData {
    FinAbGroup group;
    GroupHom embedding;
    LatticeQuotient quotient; // ambient space = Z^(domain generators)

    /// Coordinates in the kernel group of a domain element known to lie in
    /// the kernel.
    GroupElem preimage(const GroupElem& domain_elem) const;
};

KernelData kernel_data(const GroupHom& h);

} // namespace arimat
