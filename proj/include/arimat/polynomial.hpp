#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arimat {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// No explicit zero coefficients are stored.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(const mpz_class& c);
    static IntPolynomial monomial(int degree, const mpz_class& c);
    /// Polynomial from ascending coefficients c[0] + c[1] t + ...
    static IntPolynomial from_ascending(const std::vector<mpz_class>& c);

    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(int degree) const;
    int degree() const; // -1 for the zero polynomial
    bool is_zero() const { return terms_.empty(); }

    void add_term(int degree, const mpz_class& c);
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

    /// p(t + delta), expanded exactly.
    IntPolynomial shifted_argument(const mpz_class& delta) const;
    /// t^r * p(1/t); requires degree() <= r.
    IntPolynomial reversed(int r) const;
    mpz_class evaluate(const mpz_class& x) const;

    /// Descending total degree, '^' for powers, '*' between factors,
    /// explicit signs; "0" for the zero polynomial.
    std::string to_string(const std::string& var) const;

private:
    std::map<int, mpz_class> terms_;
};

/// Bivariate polynomial (exponent pair -> coefficient).
class IntPolynomial2 {
public:
    const std::map<std::pair<int, int>, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(int i, int j) const;
    bool operator==(const IntPolynomial2& o) const { return terms_ == o.terms_; }

    void add_term(int i, int j, const mpz_class& c);
    /// Adds c * px(x) * py(y).
    void add_product(const mpz_class& c, const IntPolynomial& px,
                     const IntPolynomial& py);

    IntPolynomial at_y(const mpz_class& y) const;
    IntPolynomial at_x(const mpz_class& x) const;

    std::string to_string(const std::string& xvar, const std::string& yvar) const;

private:
    std::map<std::pair<int, int>, mpz_class> terms_;
};

/// binomial(n, k) with binomial(n, k) = 0 for n < 0 or k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Coefficient of t^d in (h[0] + h[1] t + ... ) / (1-t)^r.
mpz_class hilbert_series_coeff(const std::vector<mpz_class>& h, int r, int d);

} // namespace arimat
