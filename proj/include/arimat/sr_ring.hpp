#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arimat/polynomial.hpp"
#include "arimat/poset.hpp"

namespace arimat {

/// Monomial in the poset-element variables: sorted (variable, exponent)
/// pairs, exponents positive.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    static Monomial one() { return {}; }
    static Monomial variable(int v) { return Monomial{{{v, 1}}}; }
    Monomial times(const Monomial& o) const;
    Monomial times_var(int v) const;
    /// Total degree under the given variable weights.
    long weighted_degree(const std::vector<int>& weight) const;
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator<(const Monomial& o) const { return factors < o.factors; }
};

/// Integer combination of monomials; no zero coefficients stored.
struct FormalPolynomial {
    std::map<Monomial, mpz_class> terms;

    void add_term(const Monomial& m, const mpz_class& c);
};

enum class GenKind { S1, S2, S3 };

struct SRGenerator {
    GenKind kind;
    int yi = -1, yj = -1; // the defining pair for S1/S2
    FormalPolynomial poly;
};

/// Stanley-Reisner ideal of a simplicial poset: (S1) products of pairs with
/// no common upper bound, (S2) straightening binomials, (S3) y_0 - 1.
/// Variables are poset element indices; deg(y) = rho(y).
struct SRIdeal {
    const IndPoset* poset = nullptr;
    std::vector<SRGenerator> generators;
    std::vector<int> degree; // per variable
    int zero_index = 0;
};

/// Throws NotSimplicialError when the poset is not simplicial (and
/// NoUniqueMinError propagates for multi-component input).
SRIdeal sr_ideal(const IndPoset& p);

/// Dimension over Q of the degree-d piece of K[P]: after the y_0 = 1
/// substitution, the number of degree-d monomials minus the rank of the
/// span of all monomial multiples of the generators, by exact elimination.
mpz_class hilbert_oracle(const SRIdeal& ideal, int d);

/// (h_0..h_r, r): the closed form h(t)/(1-t)^r of the Hilbert series.
std::pair<std::vector<mpz_class>, int> hilbert_closed(const IndPoset& p);

/// Oracle dimensions equal the series expansion of h_P(t)/(1-t)^r for all
/// d <= D. Default D is rank + 3.
bool verify_hilbert(const IndPoset& p, int max_degree);
bool verify_hilbert(const IndPoset& p);

/// Oracle dimensions of a (reduced) poset equal (1/c) times the series
/// expansion of h(t)/(1-t)^r.
bool verify_hilbert_scaled(const IndPoset& reduced, const std::vector<mpz_class>& h,
                           int r, const mpz_class& c, int max_degree);

/// One generator per line, variables named by `labels`; degree-0 variables
/// are dropped from products (y_0 acts as 1 via S3).
std::string render_ideal(const SRIdeal& ideal, const std::vector<std::string>& labels);

} // namespace arimat
