#include "pdres/matlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdres {

ScalarMatrix::ScalarMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

ScalarMatrix ScalarMatrix::identity(const Field& f, std::size_t n) {
    ScalarMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Scalar& ScalarMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix: index out of range");
    return data_[i * cols_ + j];
}

const Scalar& ScalarMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix: index out of range");
    return data_[i * cols_ + j];
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    }
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& rhs) const {
    if (field_ != rhs.field_ || cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix: product shape mismatch");
    }
    ScalarMatrix m(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                m.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        }
    }
    return m;
}

bool ScalarMatrix::operator==(const ScalarMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

ScalarMatrix ScalarMatrix::rref(std::vector<std::size_t>* pivots) const {
    ScalarMatrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = pivot_row; i < rows_; ++i) {
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        }
        if (sel == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot_row, j), m.at(sel, j));
        const Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            const Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) {
                m.at(i, j) -= factor * m.at(pivot_row, j);
            }
        }
        if (pivots) pivots->push_back(col);
        ++pivot_row;
    }
    return m;
}

std::size_t ScalarMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    const ScalarMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free_col] = Scalar::one(field_);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -r.at(k, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: inverse of non-square matrix");
    ScalarMatrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(field_);
    }
    std::vector<std::size_t> pivots;
    const ScalarMatrix r = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() >= cols_) throw std::domain_error("matrix: singular");
    ScalarMatrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
    }
    return inv;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: apply arity mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

Scalar ScalarMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: determinant of non-square matrix");
    ScalarMatrix m = *this;
    Scalar d = Scalar::one(field_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = col; i < rows_; ++i) {
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        }
        if (sel == rows_) return Scalar::zero(field_);
        if (sel != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(sel, j));
            d = -d;
        }
        d *= m.at(col, col);
        const Scalar inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Scalar factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return d;
}

PolyMatrix::PolyMatrix(const Field& f, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(f), nvars_(nvars), rows_(rows), cols_(cols),
      data_(rows * cols, Polynomial::zero(f, nvars)) {}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix: index out of range");
    return data_[i * cols_ + j];
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix: index out of range");
    return data_[i * cols_ + j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    if (field_ != rhs.field_ || nvars_ != rhs.nvars_ || cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix: product shape mismatch");
    }
    PolyMatrix m(field_, nvars_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                m.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        }
    }
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ScalarMatrix PolyMatrix::eval(const std::vector<Scalar>& point) const {
    ScalarMatrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero()) m.at(i, j) = at(i, j).eval(point);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    PolyMatrix m(field_, nvars_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            m.at(i, j) = at(row_idx[i], col_idx[j]);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> ri, ci;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r != i) ri.push_back(r);
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        if (c != j) ci.push_back(c);
    }
    return submatrix(ri, ci);
}

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Polynomial::one(field_, nvars_);
    if (n > 20) throw std::invalid_argument("matrix: determinant size limit exceeded");
    // Expand row by row over column subsets: efficient for the sparse
    // linear-form matrices that occur here.
    std::vector<Polynomial> prev(1u << n, Polynomial::zero(field_, nvars_));
    prev[0] = Polynomial::one(field_, nvars_);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Polynomial> next(1u << n, Polynomial::zero(field_, nvars_));
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
            if (prev[mask].is_zero()) continue;
            std::size_t parity = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask & (1u << j)) { ++parity; continue; }
                const Polynomial& entry = at(r, j);
                if (entry.is_zero()) continue;
                // Sign: r + position of column j within the new subset.
                Polynomial contrib = prev[mask] * entry;
                if ((r + parity) % 2 != 0) contrib = -contrib;
                next[mask | (1u << j)] += contrib;
            }
        }
        prev = std::move(next);
    }
    return prev[(1u << n) - 1];
}

bool PolyMatrix::is_alternating() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (at(i, j) != -at(j, i)) return false;
        }
    }
    return true;
}

namespace {

Polynomial pfaffian_rec(const PolyMatrix& m, std::vector<std::size_t>& idx) {
    const Field& f = m.field();
    if (idx.empty()) return Polynomial::one(f, m.nvars());
    const std::size_t i0 = idx[0];
    Polynomial acc = Polynomial::zero(f, m.nvars());
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const Polynomial& entry = m.at(i0, idx[t]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t s = 1; s < idx.size(); ++s) {
            if (s != t) rest.push_back(idx[s]);
        }
        Polynomial contrib = entry * pfaffian_rec(m, rest);
        if (t % 2 == 0) contrib = -contrib;
        acc += contrib;
    }
    return acc;
}

}  // namespace

Polynomial PolyMatrix::pfaffian() const {
    if (!is_alternating()) throw std::invalid_argument("matrix: pfaffian of non-alternating matrix");
    if (rows_ % 2 != 0) throw std::invalid_argument("matrix: pfaffian of odd size matrix");
    std::vector<std::size_t> idx(rows_);
    for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
    return pfaffian_rec(*this, idx);
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // Advance to the next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cur[i] != i + n - k) break;
            if (i == 0) return out;
        }
        if (cur[i] == i + n - k) return out;
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

void normalize_ideal(std::vector<Polynomial>& gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& p) { return p.is_zero(); }),
               gens.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

std::vector<Polynomial> multiply_ideals(const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out;
    for (const Polynomial& g : a) {
        for (const Polynomial& h : b) out.push_back(g * h);
    }
    normalize_ideal(out);
    return out;
}

std::vector<Polynomial> PolyMatrix::minors_ideal(int r) const {
    if (r <= 0) return {Polynomial::one(field_, nvars_)};
    const std::size_t rr = static_cast<std::size_t>(r);
    if (rr > rows_ || rr > cols_) return {};
    std::vector<Polynomial> gens;
    for (const auto& ri : subsets_of_size(rows_, rr)) {
        for (const auto& ci : subsets_of_size(cols_, rr)) {
            gens.push_back(submatrix(ri, ci).det());
        }
    }
    normalize_ideal(gens);
    return gens;
}

std::vector<Polynomial> PolyMatrix::principal_pfaffian_ideal(int size) const {
    if (!is_alternating()) throw std::invalid_argument("matrix: pfaffian of non-alternating matrix");
    if (size <= 0) return {Polynomial::one(field_, nvars_)};
    const std::size_t s = static_cast<std::size_t>(size);
    if (s % 2 != 0) throw std::invalid_argument("matrix: pfaffian ideal size must be even");
    if (s > rows_) return {};
    std::vector<Polynomial> gens;
    for (const auto& idx : subsets_of_size(rows_, s)) {
        gens.push_back(submatrix(idx, idx).pfaffian());
    }
    normalize_ideal(gens);
    return gens;
}

}  // namespace pdres
