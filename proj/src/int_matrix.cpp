#include "arimat/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace arimat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<mpz_class>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<mpz_class> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::vector<mpz_class> IntMatrix::column(std::size_t j) const {
    std::vector<mpz_class> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
}

IntMatrix IntMatrix::top_rows(std::size_t n) const {
    IntMatrix m(n, cols_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("row mismatch in hstack");
    IntMatrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
}

IntMatrix IntMatrix::without_row(std::size_t drop) const {
    IntMatrix m(rows_ - 1, cols_);
    for (std::size_t i = 0, t = 0; i < rows_; ++i) {
        if (i == drop) continue;
        for (std::size_t j = 0; j < cols_; ++j) m(t, j) = (*this)(i, j);
        ++t;
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j);
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

} // namespace arimat
