#include "leftorder/int_matrix.hpp"

#include "leftorder/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace leftorder {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw StructuralError("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("dimension mismatch in matrix product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out << ',';
        out << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << m(r, c).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw StructuralError("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
            ++flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    Integer det = m(n - 1, n - 1);
    return flips % 2 ? Integer(-det) : det;
}

std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
}

namespace {

// Maintains d = row_ops * m * col_ops and m = left * d * right under
// elementary operations on d.
struct Reducer {
    IntMatrix d, left, right, row_ops, col_ops;

    explicit Reducer(const IntMatrix& m)
        : d(m), left(IntMatrix::identity(m.rows())), right(IntMatrix::identity(m.cols())),
          row_ops(IntMatrix::identity(m.rows())), col_ops(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
        for (std::size_t c = 0; c < row_ops.cols(); ++c) std::swap(row_ops(i, c), row_ops(j, c));
        for (std::size_t r = 0; r < left.rows(); ++r) std::swap(left(r, i), left(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
        for (std::size_t r = 0; r < col_ops.rows(); ++r) std::swap(col_ops(r, i), col_ops(r, j));
        for (std::size_t c = 0; c < right.cols(); ++c) std::swap(right(i, c), right(j, c));
    }
    // row i += k * row j
    void add_row(std::size_t i, std::size_t j, const Integer& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += k * d(j, c);
        for (std::size_t c = 0; c < row_ops.cols(); ++c) row_ops(i, c) += k * row_ops(j, c);
        // left <- left * E^-1, E^-1 subtracts: column j -= k * column i
        for (std::size_t r = 0; r < left.rows(); ++r) left(r, j) -= k * left(r, i);
    }
    // column i += k * column j
    void add_col(std::size_t i, std::size_t j, const Integer& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) += k * d(r, j);
        for (std::size_t r = 0; r < col_ops.rows(); ++r) col_ops(r, i) += k * col_ops(r, j);
        for (std::size_t c = 0; c < right.cols(); ++c) right(j, c) -= k * right(i, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
        for (std::size_t c = 0; c < row_ops.cols(); ++c) row_ops(i, c) = -row_ops(i, c);
        for (std::size_t r = 0; r < left.rows(); ++r) left(r, i) = -left(r, i);
    }
};

// Floor-free quotient toward zero is fine: we only need |remainder| < |pivot|.
Integer quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    Reducer red(m);
    IntMatrix& d = red.d;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: smallest nonzero |entry| in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r) {
                for (std::size_t c = t; c < cols; ++c) {
                    if (d(r, c) == 0) continue;
                    if (pr == rows || abs(d(r, c)) < abs(d(pr, pc))) {
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr == rows) break;  // trailing block is zero
            red.swap_rows(t, pr);
            red.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d(r, t) == 0) continue;
                red.add_row(r, t, -quotient(d(r, t), d(t, t)));
                if (d(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d(t, c) == 0) continue;
                red.add_col(c, t, -quotient(d(t, c), d(t, t)));
                if (d(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row t and retry.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (d(r, c) % d(t, t) != 0) {
                        bad = r;
                        break;
                    }
                }
            }
            if (bad == rows) break;
            red.add_row(t, bad, Integer(1));
        }
        if (d(t, t) < 0) red.negate_row(t);
    }

    SmithForm out;
    out.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(d(i, i));
    out.left = std::move(red.left);
    out.right = std::move(red.right);
    out.row_ops = std::move(red.row_ops);
    out.col_ops = std::move(red.col_ops);
    return out;
}

}  // namespace leftorder
