#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arimat {

/// Dense matrix of arbitrary-precision integers, row-major.
/// Zero rows or columns are legal (Z^0 shows up as the ambient space of the
/// empty set all the time).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::size_t rows,
                                  const std::vector<std::vector<mpz_class>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    std::vector<mpz_class> column(std::size_t j) const;
    /// Matrix made of the columns listed in `idx` (0-based), in that order.
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
    /// First `n` rows.
    IntMatrix top_rows(std::size_t n) const;
    IntMatrix hstack(const IntMatrix& o) const;
    /// Drops row `i`.
    IntMatrix without_row(std::size_t i) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& c);
    /// col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& c);

    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

} // namespace arimat
