#include "arimat/exact_linalg.hpp"

#include <cstdlib>
#include <stdexcept>

#include "arimat/errors.hpp"

namespace arimat {

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// g = s*a + u*b, g > 0 unless a = b = 0.
void gcd_ext(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s,
             mpz_class& u) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);

    std::size_t t = 0;
    while (t < m && t < n) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::size_t pi = t, pj = t;
        mpz_class best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const mpz_class& v = D(i, j);
                if (v == 0) continue;
                mpz_class av = abs(v);
                if (best == 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }

        bool settled = false;
        while (!settled) {
            settled = true;
            // Clear column t below the pivot.
            for (std::size_t i = t + 1; i < m && settled; ++i) {
                if (D(i, t) == 0) continue;
                mpz_class q = floor_div(D(i, t), D(t, t));
                D.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0) {
                    // Remainder is a smaller positive pivot.
                    D.swap_rows(i, t);
                    U.swap_rows(i, t);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < n && settled; ++j) {
                if (D(t, j) == 0) continue;
                mpz_class q = floor_div(D(t, j), D(t, t));
                D.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0) {
                    D.swap_cols(j, t);
                    V.swap_cols(j, t);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Pivot must divide every remaining entry for the invariant
            // factor chain; if not, fold the offending row in and redo.
            for (std::size_t i = t + 1; i < m && settled; ++i)
                for (std::size_t j = t + 1; j < n && settled; ++j) {
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        settled = false;
                    }
                }
        }
        ++t;
    }
    return {std::move(U), std::move(D), std::move(V)};
}

IntMatrix hermite_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    IntMatrix H = A;
    std::size_t c = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        std::size_t j0 = c;
        while (j0 < n && H(r, j0) == 0) ++j0;
        if (j0 == n) continue;
        H.swap_cols(c, j0);
        // Fold all columns right of c into the gcd at (r, c).
        for (std::size_t j = c + 1; j < n; ++j) {
            if (H(r, j) == 0) continue;
            mpz_class a = H(r, c), b = H(r, j), g, s, u;
            gcd_ext(a, b, g, s, u);
            mpz_class ag = a / g, bg = b / g;
            for (std::size_t i = 0; i < m; ++i) {
                mpz_class hc = H(i, c), hj = H(i, j);
                H(i, c) = s * hc + u * hj;
                H(i, j) = -bg * hc + ag * hj;
            }
        }
        if (H(r, c) < 0) H.negate_col(c);
        // Reduce the pivot row entries of earlier columns into [0, pivot).
        for (std::size_t j = 0; j < c; ++j) {
            mpz_class q = floor_div(H(r, j), H(r, c));
            H.add_col_multiple(j, c, -q);
        }
        pivot_rows.push_back(r);
        ++c;
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c; ++j) keep.push_back(j);
    return H.select_columns(keep);
}

int integer_rank(const IntMatrix& A) {
    IntMatrix W = A;
    const std::size_t m = W.rows(), n = W.cols();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && W(piv, col) == 0) ++piv;
        if (piv == m) continue;
        W.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                mpz_class num = W(r, col) * W(i, j) - W(i, col) * W(r, j);
                mpz_divexact(W(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            W(i, col) = 0;
        }
        prev = W(r, col);
        ++r;
    }
    return static_cast<int>(r);
}

mpz_class determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix W = A;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && W(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            W.swap_rows(col, piv);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                mpz_class num = W(col, col) * W(i, j) - W(i, col) * W(col, j);
                mpz_divexact(W(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            W(i, col) = 0;
        }
        prev = W(col, col);
    }
    return sign * W(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
    if (U.rows() != U.cols()) throw std::invalid_argument("inverse of non-square");
    const std::size_t n = U.rows();
    // Gauss-Jordan over Q on [U | I].
    std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = mpq_class(U(i, j));
        w[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        std::swap(w[col], w[piv]);
        mpq_class inv = 1 / w[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) w[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            mpq_class f = w[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = w[i][n + j];
            if (v.get_den() != 1)
                throw std::invalid_argument("matrix is not unimodular");
            inv(i, j) = v.get_num();
        }
    return inv;
}

IntMatrix saturate(const IntMatrix& L) {
    const std::size_t n = L.rows();
    SnfDecomposition snf = smith_normal_form(L);
    std::size_t rank = 0;
    std::size_t diag = std::min(snf.D.rows(), snf.D.cols());
    for (std::size_t i = 0; i < diag; ++i)
        if (snf.D(i, i) != 0) ++rank;
    if (rank == 0) return IntMatrix(n, 0);
    IntMatrix Uinv = unimodular_inverse(snf.U);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < rank; ++j) keep.push_back(j);
    return hermite_normal_form(Uinv.select_columns(keep));
}

std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& A,
                                                     const std::vector<mpz_class>& b) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw std::invalid_argument("rhs length mismatch");
    std::vector<std::vector<mpq_class>> w(m, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = mpq_class(A(i, j));
        w[i][n] = mpq_class(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[row], w[piv]);
        mpq_class inv = 1 / w[row][col];
        for (std::size_t j = col; j <= n; ++j) w[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            mpq_class f = w[i][col];
            for (std::size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;
    std::vector<mpq_class> x(n, mpq_class(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = w[k][n];
    return x;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& A,
                                                    const std::vector<mpz_class>& b) {
    auto q = solve_rational(A, b);
    if (!q) return std::nullopt;
    std::vector<mpz_class> x;
    x.reserve(q->size());
    for (const mpq_class& v : *q) {
        if (v.get_den() != 1) return std::nullopt;
        x.push_back(v.get_num());
    }
    return x;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<mpz_class>& v) {
    return solve_integer(basis, v).has_value();
}

mpz_class lattice_index_in_saturation(const IntMatrix& L) {
    SnfDecomposition snf = smith_normal_form(L);
    mpz_class index = 1;
    std::size_t diag = std::min(snf.D.rows(), snf.D.cols());
    for (std::size_t i = 0; i < diag; ++i)
        if (snf.D(i, i) != 0) index *= snf.D(i, i);
    return index;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    SnfDecomposition snf = smith_normal_form(A);
    std::size_t rank = 0;
    std::size_t diag = std::min(snf.D.rows(), snf.D.cols());
    for (std::size_t i = 0; i < diag; ++i)
        if (snf.D(i, i) != 0) ++rank;
    std::vector<std::size_t> keep;
    for (std::size_t j = rank; j < A.cols(); ++j) keep.push_back(j);
    return snf.V.select_columns(keep);
}

} // namespace arimat
