#pragma once

#include "leftorder/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace leftorder {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

// Determinant of a square matrix (cofactor-free: Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// Smith normal form m = left * D * right, D = diag(diagonal) padded to m's
/// shape, with d_1 | d_2 | ... and all d_i >= 0. `row_ops` and `col_ops` are
/// the inverses of `left` and `right`, so row_ops * m * col_ops = D.
struct SmithForm {
    std::vector<Integer> diagonal;  // length min(rows, cols)
    IntMatrix left;
    IntMatrix right;
    IntMatrix row_ops;
    IntMatrix col_ops;

    std::size_t rank() const;
    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace leftorder
