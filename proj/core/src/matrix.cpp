#include "toruscount/matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace toruscount {

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), a_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = rows[i][j];
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    return std::vector<Integer>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
    std::vector<std::vector<Integer>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

bool IntMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (at(i, j) != 0) return false;
    }
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Integer& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) += c * at(k, j);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const Integer& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) += c * at(i, k);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("vstack column mismatch");
    std::size_t cols = a.rows() != 0 ? a.cols() : b.cols();
    IntMatrix out(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Integer> out(m.rows(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

}  // namespace toruscount
