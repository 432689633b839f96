#pragma once

#include <cstddef>
#include <vector>

#include "pdres/polyring.hpp"
#include "pdres/scalars.hpp"

namespace pdres {

/// Dense matrix over a Field with exact arithmetic.
class ScalarMatrix {
public:
    ScalarMatrix(const Field& f, std::size_t rows, std::size_t cols);

    static ScalarMatrix identity(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;

    ScalarMatrix transpose() const;
    ScalarMatrix operator*(const ScalarMatrix& rhs) const;
    bool operator==(const ScalarMatrix& rhs) const;

    std::size_t rank() const;

    /// Basis of the right kernel {v : M v = 0}, one vector per column of the
    /// result, in the deterministic order induced by free columns of the RREF.
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /// Reduced row echelon form; pivot column indices are appended to pivots.
    ScalarMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    /// Inverse of a square matrix; throws std::domain_error("singular").
    ScalarMatrix inverse() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Scalar det() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Dense matrix of polynomials over a common ring.
class PolyMatrix {
public:
    PolyMatrix(const Field& f, std::size_t nvars, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& at(std::size_t i, std::size_t j);
    const Polynomial& at(std::size_t i, std::size_t j) const;

    PolyMatrix operator*(const PolyMatrix& rhs) const;
    bool is_zero() const;

    /// Entry-wise evaluation at a point.
    ScalarMatrix eval(const std::vector<Scalar>& point) const;

    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

    /// Submatrix with row i and column j deleted.
    PolyMatrix minor_matrix(std::size_t i, std::size_t j) const;

    /// Determinant of a square matrix (subset dynamic programming, suitable
    /// for the small sizes used here).
    Polynomial det() const;

    /// True if the matrix is alternating: skew-symmetric with zero diagonal.
    bool is_alternating() const;

    /// Pfaffian of an even-size alternating matrix; pf of the empty matrix
    /// is 1.  Throws std::invalid_argument for odd size or non-alternating
    /// input.  Sign convention: pf [[0, a], [-a, 0]] = a.
    Polynomial pfaffian() const;

    /// All r x r minors, deduplicated, sorted, zero minors dropped.
    /// r <= 0 yields {1} (unit ideal); r > min(rows, cols) yields {} (zero
    /// ideal).  An empty list therefore always means the zero ideal.
    std::vector<Polynomial> minors_ideal(int r) const;

    /// Pfaffians of all principal size x size submatrices of an alternating
    /// matrix (size must be even), with the same conventions as minors_ideal:
    /// size <= 0 yields {1}, size > rows yields {}.
    std::vector<Polynomial> principal_pfaffian_ideal(int size) const;

private:
    Field field_;
    std::size_t nvars_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> data_;
};

/// Sorts generators and removes duplicates and zeros, in place.
void normalize_ideal(std::vector<Polynomial>& gens);

/// Product ideal {g * h}; either factor list empty (zero ideal) gives {}.
std::vector<Polynomial> multiply_ideals(const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b);

/// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace pdres
