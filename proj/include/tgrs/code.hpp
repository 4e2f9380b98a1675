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
 * @file code.hpp
 * @brief Arbitrary twisted generalized Reed-Solomon codes.
 *
 * A TgrsCode is the tuple (tower, n, k, α, v, A) with distinct evaluation
 * points α, nonzero column multipliers v, and a k×(n-k) twist matrix A. Its
 * generator matrix is [I_k | A]·V_n(α)·diag(v); the parity-check matrix is
 * [I_{n-k} | -J·Aᵀ·J]·T(α)·V_n(α)·diag(u/v) with u_i = 1/G'(α_i). Both are
 * computed at construction and the identity G·Hᵀ = 0 is asserted, so a
 * successfully constructed code is internally consistent by definition.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tgrs/matrix.hpp"

namespace tgrs {

inline constexpr std::uint64_t kDefaultDistanceCap = 10'000'000;

/// Sparse twist description: entry (h_j, t_j) receives η_j.
struct HookTwistSpec {
    std::vector<FieldElement> eta;  // nonzero twist coefficients
    std::vector<std::size_t> hooks;   // h_j in [0, k-1]
    std::vector<std::size_t> twists;  // t_j in [1, n-k]
};

/// Embeds a hook/twist description into the dense k×(n-k) twist matrix form.
FieldMatrix twist_from_hooks(const HookTwistSpec& spec, std::size_t n, std::size_t k, const FieldTower* tower);

/// Classical dual multipliers u_i = 1/∏_{j≠i}(α_i - α_j) = 1/G'(α_i).
std::vector<FieldElement> u_vector(std::span<const FieldElement> alpha);

struct DualSpaces {
    FieldMatrix euclidean_dual;  // basis of the Euclidean dual, as rows
    FieldMatrix code_pow_q;      // generator of C^q (entrywise q-power of G)
    FieldMatrix hermitian_dual;  // basis of the Hermitian dual, as rows
};

class TgrsCode {
   public:
    TgrsCode(const FieldTower* tower, std::vector<FieldElement> alpha, std::vector<FieldElement> v,
             FieldMatrix twist);

    const FieldTower& tower() const { return *tower_; }
    const FieldTower* tower_ptr() const { return tower_; }
    std::size_t n() const { return alpha_.size(); }
    std::size_t k() const { return twist_.rows(); }
    const std::vector<FieldElement>& alpha() const { return alpha_; }
    const std::vector<FieldElement>& v() const { return v_; }
    const FieldMatrix& twist() const { return twist_; }

    const FieldMatrix& generator_matrix() const { return generator_; }
    const FieldMatrix& parity_check_matrix() const { return parity_; }

    /// Codeword of a length-k message. Computed both as f·G and by evaluating
    /// the twisted polynomial; the two paths are asserted equal.
    std::vector<FieldElement> encode(std::span<const FieldElement> message) const;

    DualSpaces dual_spaces() const;

    /// Exact minimum Hamming distance by enumerating all nonzero messages,
    /// when their count does not exceed the cap; nullopt signals exceeds-cap
    /// so callers fall back to the MDS minor test.
    std::optional<std::size_t> min_distance_exhaustive(std::uint64_t cap = kDefaultDistanceCap) const;

   private:
    const FieldTower* tower_;
    std::vector<FieldElement> alpha_;
    std::vector<FieldElement> v_;
    FieldMatrix twist_;
    FieldMatrix generator_;
    FieldMatrix parity_;
};

/// True iff two generator matrices span the same code (row space equality).
bool codes_equal(const FieldMatrix& g1, const FieldMatrix& g2);

}  // namespace tgrs
