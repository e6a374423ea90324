#pragma once

#include "kgc/errors.hpp"
#include "kgc/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kgc {

// Dense matrix over Integer, row-major.  This is the only matrix type in the
// library; everything (symplectic elements, lattice bases, wedge-cube
// operators) is a view on top of it.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    // Row-major literal, e.g. IntMatrix{{1,2},{3,4}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Bounds-checked access for code paths fed by external input.
    Integer& at(std::size_t r, std::size_t c);
    const Integer& at(std::size_t r, std::size_t c) const;

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }

    IntMatrix transpose() const;

    // Elementary operations used by the normal-form algorithms.  They mutate
    // in place; the algorithms mirror each one onto their transform
    // accumulators (and inverse accumulators, with the inverse op).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k); // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k); // col dst += k * col src

    std::vector<Integer> row(std::size_t i) const;
    std::vector<Integer> col(std::size_t j) const;
    void set_row(std::size_t i, const std::vector<Integer>& v);
    void set_col(std::size_t j, const std::vector<Integer>& v);

    // Copy of rows [r0, r1) and columns [c0, c1).
    IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);
IntMatrix operator-(const IntMatrix& a);

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x);

// Stack b below a (equal column counts).
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

bool is_zero_vector(const std::vector<Integer>& v);

} // namespace kgc
