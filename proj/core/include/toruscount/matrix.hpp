#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "toruscount/rational.hpp"

namespace toruscount {

/// Dense matrix over arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}
    explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Integer> row(std::size_t i) const;
    std::vector<std::vector<Integer>> to_rows() const;

    bool is_zero_row(std::size_t i) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row i += c * row k
    void add_row_multiple(std::size_t i, std::size_t k, const Integer& c);
    /// col j += c * col k
    void add_col_multiple(std::size_t j, std::size_t k, const Integer& c);

    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// Stacks the rows of b below the rows of a (equal column counts).
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Integer> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v);

}  // namespace toruscount
