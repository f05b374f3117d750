#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arimat/abelian.hpp"
#include "arimat/gstruct.hpp"
#include "arimat/polynomial.hpp"
#include "arimat/subset.hpp"

namespace arimat {

struct PosetElement {
    Subset face = 0;
    GroupElem g;
    int rho = 0;
};

/// Bitset over poset elements.
class ElementSet {
public:
    explicit ElementSet(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    ElementSet& operator|=(const ElementSet& o);
    ElementSet operator&(const ElementSet& o) const;
    bool any() const;
    std::size_t count() const;
    std::vector<int> to_list() const;
    bool operator==(const ElementSet& o) const = default;

private:
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

/// Independence poset: elements (S, g), covers defined by the projection
/// maps. Elements are stored sorted by (rho, subset, coordinates), which is
/// also the DOT node order.
class IndPoset {
public:
    IndPoset() = default;
    /// Raw constructor for hand-built posets in tests; covers_down[i] lists
    /// the elements that element i covers.
    IndPoset(std::vector<PosetElement> elems, std::vector<std::vector<int>> covers_down);

    std::size_t size() const { return elems_.size(); }
    const PosetElement& element(std::size_t i) const { return elems_[i]; }
    const std::vector<int>& covers_down(std::size_t i) const { return down_[i]; }
    const std::vector<int>& covers_up(std::size_t i) const { return up_[i]; }

    /// Index of (face, g), or -1.
    int find(Subset face, const GroupElem& g) const;

    int rank() const;
    std::vector<int> minimal_elements() const;
    bool leq(int a, int b) const;
    /// All elements <= i (including i), as a bitset.
    const ElementSet& down_set(int i) const;
    const ElementSet& up_set(int i) const;

    std::vector<mpz_class> f_vector() const;
    IntPolynomial f_polynomial() const;
    IntPolynomial h_polynomial() const;
    /// (h_0, ..., h_r) with h(t) = f(t-1) = sum h_i t^(r-i).
    std::vector<mpz_class> h_vector() const;

private:
    std::vector<PosetElement> elems_;
    std::vector<std::vector<int>> down_, up_;
    mutable std::vector<ElementSet> down_closure_, up_closure_;
    void ensure_closures() const;
};

/// Builds the independence poset; validates the structure first and throws
/// InvalidStructureError when validation fails.
IndPoset build_poset(const GroupStructure& g);

/// Connected components of the Hasse diagram, as stand-alone posets, ordered
/// by their smallest element index.
std::vector<IndPoset> components(const IndPoset& p);

/// True iff every interval [0-hat, y] is a boolean algebra (checked via the
/// atom-set criterion). Throws NoUniqueMinError on multi-component input.
bool verify_simplicial(const IndPoset& p);

/// Unique maximal common lower bound. Throws NoUpperBoundError when y1 and
/// y2 have no common upper bound, NonUniqueMeetError when the maximum is not
/// unique (the poset is then not simplicial).
int meet(const IndPoset& p, int y1, int y2);

std::vector<int> minimal_upper_bounds(const IndPoset& p, int y1, int y2);

/// Deterministic DOT rendering of the Hasse diagram; edges point from
/// covered to covering element.
std::string export_dot(const IndPoset& p);

/// Canonical "(S, g)" node label.
std::string element_label(const PosetElement& e);

/// Short display labels in the paper's style: "O" for (∅, ·), lowercase
/// letters for singleton faces, uppercase letters from 'C' for larger faces,
/// followed by the coordinates.
std::vector<std::string> display_labels(const IndPoset& p);

} // namespace arimat
