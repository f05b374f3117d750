#include "arimat/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace arimat {

IntPolynomial::IntPolynomial(const mpz_class& c) {
    if (c != 0) terms_[0] = c;
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& c) {
    IntPolynomial p;
    p.add_term(degree, c);
    return p;
}

IntPolynomial IntPolynomial::from_ascending(const std::vector<mpz_class>& c) {
    IntPolynomial p;
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
    return p;
}

mpz_class IntPolynomial::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int IntPolynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

void IntPolynomial::add_term(int degree, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

IntPolynomial IntPolynomial::shifted_argument(const mpz_class& delta) const {
    IntPolynomial r;
    for (const auto& [d, c] : terms_) {
        // (t + delta)^d expanded by binomials.
        mpz_class power = 1;
        for (int k = d; k >= 0; --k) {
            // coefficient of t^k is C(d, k) * delta^(d-k)
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), d, k);
            r.add_term(k, c * b * power);
            power *= delta;
        }
    }
    return r;
}

IntPolynomial IntPolynomial::reversed(int r) const {
    if (degree() > r) throw std::invalid_argument("degree exceeds reversal bound");
    IntPolynomial out;
    for (const auto& [d, c] : terms_) out.add_term(r - d, c);
    return out;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class total = 0;
    for (const auto& [d, c] : terms_) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), d);
        total += c * p;
    }
    return total;
}

namespace {

void render_term(std::ostringstream& os, bool first, const mpz_class& c,
                 const std::string& body) {
    mpz_class a = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || body.empty()) {
        os << a;
        if (!body.empty()) os << "*";
    }
    os << body;
}

} // namespace

std::string IntPolynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string body;
        if (it->first == 1)
            body = var;
        else if (it->first > 1)
            body = var + "^" + std::to_string(it->first);
        render_term(os, first, it->second, body);
        first = false;
    }
    return os.str();
}

mpz_class IntPolynomial2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPolynomial2::add_term(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(i, j), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void IntPolynomial2::add_product(const mpz_class& c, const IntPolynomial& px,
                                 const IntPolynomial& py) {
    if (c == 0) return;
    for (const auto& [i, ci] : px.terms())
        for (const auto& [j, cj] : py.terms()) add_term(i, j, c * ci * cj);
}

IntPolynomial IntPolynomial2::at_y(const mpz_class& y) const {
    IntPolynomial r;
    for (const auto& [ij, c] : terms_) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), y.get_mpz_t(), ij.second);
        r.add_term(ij.first, c * p);
    }
    return r;
}

IntPolynomial IntPolynomial2::at_x(const mpz_class& x) const {
    IntPolynomial r;
    for (const auto& [ij, c] : terms_) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), ij.first);
        r.add_term(ij.second, c * p);
    }
    return r;
}

std::string IntPolynomial2::to_string(const std::string& xvar,
                                      const std::string& yvar) const {
    if (terms_.empty()) return "0";
    // Descending total degree, then descending x exponent.
    std::vector<std::pair<std::pair<int, int>, mpz_class>> sorted(terms_.begin(),
                                                                  terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second;
        int tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : sorted) {
        std::string body;
        auto var_part = [](const std::string& v, int e) -> std::string {
            if (e == 0) return "";
            if (e == 1) return v;
            return v + "^" + std::to_string(e);
        };
        std::string xs = var_part(xvar, ij.first);
        std::string ys = var_part(yvar, ij.second);
        body = xs;
        if (!xs.empty() && !ys.empty()) body += "*";
        body += ys;
        render_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpz_class hilbert_series_coeff(const std::vector<mpz_class>& h, int r, int d) {
    mpz_class total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        long shift = d - static_cast<long>(i);
        if (shift < 0) continue;
        if (r == 0) {
            if (shift == 0) total += h[i];
        } else {
            total += h[i] * binomial(shift + r - 1, r - 1);
        }
    }
    return total;
}

} // namespace arimat
