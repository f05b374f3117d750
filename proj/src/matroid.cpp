#include "arimat/matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "arimat/errors.hpp"
#include "arimat/exact_linalg.hpp"

namespace arimat {

int SimplicialComplex::rank() const {
    int r = 0;
    for (Subset f : faces) r = std::max(r, subset_size(f));
    return r;
}

bool SimplicialComplex::contains(Subset s) const { return index_of(s) >= 0; }

int SimplicialComplex::index_of(Subset s) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), s, subset_less);
    if (it == faces.end() || *it != s) return -1;
    return static_cast<int>(it - faces.begin());
}

std::vector<mpz_class> SimplicialComplex::f_vector() const {
    std::vector<mpz_class> f(rank() + 1, mpz_class(0));
    for (Subset s : faces) f[subset_size(s)] += 1;
    return f;
}

IntPolynomial f_polynomial(const SimplicialComplex& complex) {
    if (complex.faces.empty())
        throw EmptyComplexError("f-polynomial of the empty complex");
    std::vector<mpz_class> f = complex.f_vector();
    int r = complex.rank();
    IntPolynomial p;
    for (int i = 0; i <= r; ++i) p.add_term(r - i, f[i]);
    return p;
}

IntPolynomial h_polynomial(const SimplicialComplex& complex) {
    return f_polynomial(complex).shifted_argument(-1);
}

Matroid Matroid::from_columns(const IntMatrix& X) {
    Matroid m;
    m.n_ = static_cast<int>(X.cols());
    if (m.n_ > 24) throw std::invalid_argument("ground set too large");
    m.rep_ = X;
    return m;
}

Matroid Matroid::from_family(int ground_size, const std::vector<Subset>& independent) {
    Matroid m;
    m.n_ = ground_size;
    if (ground_size < 0 || ground_size > 24)
        throw std::invalid_argument("ground set too large");
    m.family_.insert(independent.begin(), independent.end());
    if (!m.family_.count(0))
        throw std::invalid_argument("the empty set must be independent");
    for (Subset s : m.family_) {
        if (s >= (Subset{1} << ground_size))
            throw std::invalid_argument("independent set outside the ground set");
        for (int e : subset_elements(s))
            if (!m.family_.count(subset_without(s, e)))
                throw std::invalid_argument("independence family is not downward closed");
    }
    for (Subset a1 : m.family_)
        for (Subset a2 : m.family_) {
            if (subset_size(a2) <= subset_size(a1)) continue;
            bool found = false;
            for (int e : subset_elements(a2 & ~a1))
                if (m.family_.count(subset_with(a1, e))) {
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("independence family violates the exchange axiom");
        }
    return m;
}

bool Matroid::is_independent(Subset s) const {
    if (rep_) {
        std::vector<std::size_t> idx;
        for (int e : subset_elements(s)) idx.push_back(static_cast<std::size_t>(e - 1));
        return integer_rank(rep_->select_columns(idx)) == subset_size(s);
    }
    return family_.count(s) != 0;
}

int Matroid::rank(Subset a) const {
    auto it = rank_cache_.find(a);
    if (it != rank_cache_.end()) return it->second;
    // Greedy extension; valid because the independence family is a matroid.
    Subset current = 0;
    for (int e : subset_elements(a)) {
        Subset next = subset_with(current, e);
        if (is_independent(next)) current = next;
    }
    int r = subset_size(current);
    rank_cache_[a] = r;
    return r;
}

const SimplicialComplex& Matroid::complex() const {
    if (!complex_cache_) {
        SimplicialComplex c;
        c.ground_size = n_;
        for (Subset s = 0; s < (Subset{1} << n_); ++s)
            if (is_independent(s)) c.faces.push_back(s);
        std::sort(c.faces.begin(), c.faces.end(), subset_less);
        complex_cache_ = std::move(c);
    }
    return *complex_cache_;
}

namespace {

Subset relabel_without(Subset s, int e) {
    Subset low = s & ((Subset{1} << (e - 1)) - 1);
    Subset high = s >> e;
    return low | (high << (e - 1));
}

} // namespace

Matroid Matroid::deleted(int e) const {
    std::vector<Subset> fam;
    for (Subset s : complex().faces)
        if (!subset_contains(s, e)) fam.push_back(relabel_without(s, e));
    return from_family(n_ - 1, fam);
}

Matroid Matroid::contracted(int e) const {
    std::vector<Subset> fam;
    if (is_independent(subset_with(0, e))) {
        for (Subset s : complex().faces)
            if (subset_contains(s, e)) fam.push_back(relabel_without(subset_without(s, e), e));
    } else {
        // Contracting a loop is deletion.
        for (Subset s : complex().faces)
            if (!subset_contains(s, e)) fam.push_back(relabel_without(s, e));
    }
    return from_family(n_ - 1, fam);
}

IntPolynomial2 tutte(const Matroid& m) {
    const int n = m.ground_size();
    const int r = m.rank();
    IntPolynomial2 t;
    IntPolynomial xm1 = IntPolynomial::monomial(1, 1) - IntPolynomial(1);
    std::vector<IntPolynomial> xp(r + 1), yp(n + 1);
    xp[0] = IntPolynomial(1);
    for (int i = 1; i <= r; ++i) xp[i] = xp[i - 1] * xm1;
    yp[0] = IntPolynomial(1);
    for (int i = 1; i <= n; ++i) yp[i] = yp[i - 1] * xm1;
    for (Subset a = 0; a < (Subset{1} << n); ++a) {
        int ra = m.rank(a);
        t.add_product(1, xp[r - ra], yp[subset_size(a) - ra]);
    }
    return t;
}

} // namespace arimat
