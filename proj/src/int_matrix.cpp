#include "kgc/int_matrix.hpp"

#include <string>
#include <utility>

namespace kgc {

namespace {
[[noreturn]] void shape_mismatch(const char* op, const IntMatrix& a, const IntMatrix& b) {
    throw dimension_error(std::string(op) + ": shape mismatch " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}
} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw dimension_error("IntMatrix literal: ragged rows");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw dimension_error("IntMatrix::at: index (" + std::to_string(r) + "," +
                              std::to_string(c) + ") out of " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
    return data_[r * cols_ + c];
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
    return const_cast<IntMatrix*>(this)->at(r, c);
}

bool IntMatrix::is_zero() const {
    for (const Integer& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        data_[i * cols_ + c] = -data_[i * cols_ + c];
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r * cols_ + j] = -data_[r * cols_ + j];
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        data_[dst * cols_ + c] += k * data_[src * cols_ + c];
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r * cols_ + dst] += k * data_[r * cols_ + src];
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    std::vector<Integer> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = (*this)(i, c);
    return v;
}

std::vector<Integer> IntMatrix::col(std::size_t j) const {
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, const std::vector<Integer>& v) {
    if (v.size() != cols_)
        throw dimension_error("IntMatrix::set_row: wrong length");
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = v[c];
}

void IntMatrix::set_col(std::size_t j, const std::vector<Integer>& v) {
    if (v.size() != rows_)
        throw dimension_error("IntMatrix::set_col: wrong length");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, j) = v[r];
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
        throw dimension_error("IntMatrix::block: bad range");
    IntMatrix b(r1 - r0, c1 - c0);
    for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < c1; ++c)
            b(r - r0, c - c0) = (*this)(r, c);
    return b;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        shape_mismatch("operator+", a, b);
    IntMatrix s(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            s(r, c) = a(r, c) + b(r, c);
    return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        shape_mismatch("operator-", a, b);
    IntMatrix s(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            s(r, c) = a(r, c) - b(r, c);
    return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        shape_mismatch("operator*", a, b);
    IntMatrix p(a.rows(), b.cols());
    // i-k-j order so the inner loop walks both p and b row-contiguously.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Integer& bkj = b(k, j);
                if (bkj != 0)
                    p(i, j) += aik * bkj;
            }
        }
    return p;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
    IntMatrix s(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            s(r, c) = k * a(r, c);
    return s;
}

IntMatrix operator-(const IntMatrix& a) { return Integer(-1) * a; }

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
    if (a.cols() != x.size())
        throw dimension_error("matrix*vector: shape mismatch");
    std::vector<Integer> y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0 && x[c] != 0)
                acc += a(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols())
        shape_mismatch("vstack", a, b);
    IntMatrix s(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            s(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            s(a.rows() + r, c) = b(r, c);
    return s;
}

bool is_zero_vector(const std::vector<Integer>& v) {
    for (const Integer& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace kgc
