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

/**
 * @file matrix.hpp
 * @brief Exact dense linear algebra over a FieldTower.
 *
 * Gaussian elimination with leftmost-nonzero pivoting (exact arithmetic needs
 * no numerical pivoting), plus builders for the structured matrices used by
 * twisted Reed-Solomon codes: identity, exchange (anti-identity), diagonal,
 * Vandermonde, the coefficient Toeplitz matrix of ∏(x - α_i), and the Pascal
 * basis-change matrix of x ↦ x + b. Matrices are value types; all operations
 * are pure.
 */

#pragma once

#include <span>
#include <vector>

#include "tgrs/field.hpp"

namespace tgrs {

struct RrefResult;

class FieldMatrix {
   public:
    FieldMatrix() = default;
    /// Zero matrix of the given shape.
    FieldMatrix(const FieldTower* tower, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldTower& tower() const { return *tower_; }
    const FieldTower* tower_ptr() const { return tower_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static FieldMatrix identity(const FieldTower* tower, std::size_t k);
    /// Exchange matrix J_k: ones on the anti-diagonal. J² = I.
    static FieldMatrix exchange(const FieldTower* tower, std::size_t k);
    static FieldMatrix diagonal(std::span<const FieldElement> entries);
    /// rows × n matrix with entry (r, i) = α_i^r.
    static FieldMatrix vandermonde(std::span<const FieldElement> alpha, std::size_t rows);

    FieldMatrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    FieldMatrix operator+(const FieldMatrix& rhs) const;
    FieldMatrix operator-(const FieldMatrix& rhs) const;
    FieldMatrix scaled(const FieldElement& s) const;

    FieldElement det() const;
    /// Inverse of a square matrix; throws SingularMatrixError carrying the rank.
    FieldMatrix inverse() const;
    std::size_t rank() const;

    RrefResult rref() const;

    /// Basis of {x : A·xᵀ = 0} as rows; satisfies null_space() * Aᵀ = 0.
    FieldMatrix null_space() const;

    /// Rows of this matrix with any all-zero rows removed.
    FieldMatrix drop_zero_rows() const;

    /// Columns selected by the given indices, in order.
    FieldMatrix select_columns(std::span<const std::size_t> cols) const;

   private:
    const FieldTower* tower_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> data_;
};

struct RrefResult {
    FieldMatrix mat;
    std::vector<std::size_t> pivot_cols;  // strictly increasing
};

/// Applies x ↦ x^q entrywise (quadratic tower); involutive.
FieldMatrix entrywise_pow_q(const FieldMatrix& a);

/// Lower-triangular Toeplitz matrix of the coefficients of ∏(x - α_i) written
/// as Σ c_j x^{n-j}: first column (c_0, ..., c_{n-1}), c_0 = 1.
FieldMatrix coefficient_toeplitz(std::span<const FieldElement> alpha);

/// Upper-triangular Pascal matrix with entry (i, j) = C(j-1, i-1)·b^{j-i} for
/// i ≤ j (1-based); the basis change 1, x, ..., x^{k-1} → 1, x+b, ..., (x+b)^{k-1}.
/// Binomials are computed by the Pascal recurrence in F_p.
FieldMatrix pascal_matrix(const FieldTower* tower, std::size_t k, const FieldElement& b);

/// True iff the two matrices have the same row space (rref comparison after
/// dropping zero rows). Column counts must match.
bool same_row_space(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace tgrs
