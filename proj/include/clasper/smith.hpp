#pragma once

#include "clasper/ints.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace clasper {

// Dense exact integer matrix, row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Mat operator*(const Mat& other) const;
    bool operator==(const Mat& other) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row_i += c * row_j, col_i += c * col_j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector
    Mat transposed() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all d_k >= 0.
// Uinv and Vinv are the exact inverses, accumulated alongside.
struct SmithResult {
    Mat u, v, d;
    Mat uinv, vinv;
    std::vector<Int> diag;  // diagonal entries of D, length min(rows, cols)
    std::size_t rank = 0;   // number of nonzero diagonal entries
};

// Smith normal form. Pivot rule: smallest nonzero absolute value in the
// working submatrix, row-major tie-break, so U and V are deterministic.
SmithResult smith(const Mat& a);

// One integer solution x of A x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_linear(const Mat& a, const std::vector<Int>& b);

// Columns spanning the integer kernel lattice of A.
std::vector<std::vector<Int>> kernel_lattice(const Mat& a);

// A basis of the lattice spanned by the given generator columns.
std::vector<std::vector<Int>> lattice_basis(const std::vector<std::vector<Int>>& gens,
                                            std::size_t dim);

}  // namespace clasper
