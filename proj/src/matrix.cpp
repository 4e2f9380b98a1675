/* Copyright 2026 The TGRS Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "tgrs/matrix.hpp"

#include <algorithm>
#include <set>

namespace tgrs {

FieldMatrix::FieldMatrix(const FieldTower* tower, std::size_t rows, std::size_t cols)
    : tower_(tower), rows_(rows), cols_(cols), data_(rows * cols, tower->zero()) {}

FieldMatrix FieldMatrix::identity(const FieldTower* tower, std::size_t k) {
    FieldMatrix a(tower, k, k);
    for (std::size_t i = 0; i < k; ++i) a(i, i) = tower->one();
    return a;
}

FieldMatrix FieldMatrix::exchange(const FieldTower* tower, std::size_t k) {
    FieldMatrix a(tower, k, k);
    for (std::size_t i = 0; i < k; ++i) a(i, k - 1 - i) = tower->one();
    return a;
}

FieldMatrix FieldMatrix::diagonal(std::span<const FieldElement> entries) {
    if (entries.empty()) throw ValidationError("diagonal needs at least one entry");
    FieldMatrix a(entries[0].tower_ptr(), entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) a(i, i) = entries[i];
    return a;
}

FieldMatrix FieldMatrix::vandermonde(std::span<const FieldElement> alpha, std::size_t rows) {
    if (alpha.empty()) throw ValidationError("vandermonde needs at least one point");
    const FieldTower* t = alpha[0].tower_ptr();
    FieldMatrix a(t, rows, alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        FieldElement p = t->one();
        for (std::size_t r = 0; r < rows; ++r) {
            a(r, i) = p;
            p *= alpha[i];
        }
    }
    return a;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix a(tower_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) a(c, r) = (*this)(r, c);
    return a;
}

bool FieldMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw UsageError("matrix product shape mismatch");
    FieldMatrix out(tower_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& x = (*this)(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += x * rhs(k, c);
        }
    return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix sum shape mismatch");
    FieldMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix difference shape mismatch");
    FieldMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

FieldMatrix FieldMatrix::scaled(const FieldElement& s) const {
    FieldMatrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

FieldElement FieldMatrix::det() const {
    if (rows_ != cols_) throw UsageError("determinant requires a square matrix");
    FieldMatrix a = *this;
    FieldElement d = tower_->one();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
        std::size_t pr = pivot_row;
        while (pr < rows_ && a(pr, c).is_zero()) ++pr;
        if (pr == rows_) return tower_->zero();
        if (pr != pivot_row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pr, j), a(pivot_row, j));
            d = -d;
        }
        d *= a(pivot_row, c);
        FieldElement pinv = inv(a(pivot_row, c));
        for (std::size_t r = pivot_row + 1; r < rows_; ++r) {
            if (a(r, c).is_zero()) continue;
            FieldElement f = a(r, c) * pinv;
            for (std::size_t j = c; j < cols_; ++j) a(r, j) -= f * a(pivot_row, j);
        }
        ++pivot_row;
    }
    return d;
}

RrefResult FieldMatrix::rref() const {
    FieldMatrix a = *this;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
        std::size_t pr = pivot_row;
        while (pr < rows_ && a(pr, c).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pr, j), a(pivot_row, j));
        FieldElement pinv = inv(a(pivot_row, c));
        for (std::size_t j = 0; j < cols_; ++j) a(pivot_row, j) *= pinv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row || a(r, c).is_zero()) continue;
            FieldElement f = a(r, c);
            for (std::size_t j = 0; j < cols_; ++j) a(r, j) -= f * a(pivot_row, j);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t FieldMatrix::rank() const { return rref().pivot_cols.size(); }

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw UsageError("inverse requires a square matrix");
    FieldMatrix aug(tower_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_ + r) = tower_->one();
    }
    RrefResult rr = aug.rref();
    // invertible iff the left block reduced to the identity
    if (rr.pivot_cols.size() < rows_ || rr.pivot_cols[rows_ - 1] >= cols_) {
        std::size_t rk = 0;
        for (auto c : rr.pivot_cols)
            if (c < cols_) ++rk;
        throw SingularMatrixError("matrix is singular (rank " + std::to_string(rk) + ")", rk);
    }
    FieldMatrix out(tower_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = rr.mat(r, cols_ + c);
    return out;
}

FieldMatrix FieldMatrix::null_space() const {
    RrefResult rr = rref();
    const auto& pivots = rr.pivot_cols;
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!pivot_set.count(c)) free_cols.push_back(c);

    FieldMatrix basis(tower_, free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis(i, fc) = tower_->one();
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(i, pivots[r]) = -rr.mat(r, fc);
        // canonical form: leading nonzero entry 1
        for (std::size_t c = 0; c < cols_; ++c) {
            if (basis(i, c).is_zero()) continue;
            FieldElement lead_inv = inv(basis(i, c));
            for (std::size_t j = c; j < cols_; ++j) basis(i, j) *= lead_inv;
            break;
        }
    }
    return basis;
}

FieldMatrix FieldMatrix::drop_zero_rows() const {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < rows_; ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < cols_ && zero; ++c) zero = (*this)(r, c).is_zero();
        if (!zero) keep.push_back(r);
    }
    FieldMatrix out(tower_, keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(keep[i], c);
    return out;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const {
    FieldMatrix out(tower_, rows_, cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= cols_) throw UsageError("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, i) = (*this)(r, cols[i]);
    }
    return out;
}

FieldMatrix entrywise_pow_q(const FieldMatrix& a) {
    FieldMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = conjugate_q(a(r, c));
    return out;
}

FieldMatrix coefficient_toeplitz(std::span<const FieldElement> alpha) {
    const std::size_t n = alpha.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (alpha[i] == alpha[j]) throw ValidationError("evaluation points must be distinct");
    // g ascending: ∏(x - α_i) = Σ g[d]·x^d, monic. The paper-order coefficients
    // are c_j = g[n - j], so the first column is (g[n], g[n-1], ..., g[1]).
    std::vector<FieldElement> g = poly_from_roots(alpha);
    const FieldTower* t = alpha[0].tower_ptr();
    FieldMatrix out(t, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= r; ++c) out(r, c) = g[n - (r - c)];
    return out;
}

FieldMatrix pascal_matrix(const FieldTower* tower, std::size_t k, const FieldElement& b) {
    // Binomial triangle mod p, as field elements.
    std::vector<std::vector<FieldElement>> binom(k, std::vector<FieldElement>(k, tower->zero()));
    for (std::size_t i = 0; i < k; ++i) {
        binom[i][0] = tower->one();
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : tower->zero());
    }
    FieldMatrix out(tower, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        FieldElement bp = tower->one();
        for (std::size_t j = i; j < k; ++j) {
            out(i, j) = binom[j][i] * bp;  // C(j-1, i-1) b^{j-i} in 1-based indices
            bp *= b;
        }
    }
    return out;
}

bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.cols()) throw UsageError("row-space comparison needs equal ambient length");
    FieldMatrix ra = a.rref().mat.drop_zero_rows();
    FieldMatrix rb = b.rref().mat.drop_zero_rows();
    return ra == rb;
}

}  // namespace tgrs
