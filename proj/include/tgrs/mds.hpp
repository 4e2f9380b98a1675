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
 * @file mds.hpp
 * @brief MDS deciders for twisted codes.
 *
 * Three independent routes:
 *  - criterion: the subset determinant M(n,k,α,A,I) built from the companion
 *    matrix of ∏_{i∈I}(x - α_i) must be nonzero for every k-subset I (only
 *    stated for 3 ≤ k; smaller k falls back to minors);
 *  - minors: every k×k column submatrix of G is invertible;
 *  - exhaustive: the enumerated minimum distance equals n - k + 1.
 * Whenever more than one route is computed they must agree.
 */

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tgrs/code.hpp"
#include "tgrs/duality.hpp"

namespace tgrs {

/// Data attached to one k-subset I: the monic polynomial G_I(x) = ∏_{i∈I}(x-α_i)
/// written as Σ c_j x^{k-j}, its reversal d_j = c_{k-j}, and the companion
/// matrix A_I (superdiagonal ones, bottom row -c_k, ..., -c_1).
struct SubsetData {
    std::vector<std::size_t> indices;  // 0-based, strictly increasing
    std::vector<FieldElement> c;       // c_0 = 1, ..., c_k
    std::vector<FieldElement> d;       // d_j = c_{k-j}
    FieldMatrix companion;             // A_I, k×k
};

SubsetData subset_data(std::span<const FieldElement> alpha, std::vector<std::size_t> indices);

/// The k×k table of g_{m,t} = -γ·F_{m,t}(A_I)·γᵀ values, m = 0..k-1 rows,
/// t = 1..k columns; F_{m,t} collects the twist-row coefficients against d.
FieldMatrix mds_correction_table(const FieldMatrix& twist, const SubsetData& data);

/// The subset determinant: det(I_k + corrections) with g_{m,t} placed at
/// (m+1, t) and the +1 exactly on t = m+1.
FieldElement mds_subset_determinant(const TgrsCode& code, std::vector<std::size_t> indices);

enum class MdsMethod { criterion, minors, exhaustive };

struct MdsCertificate {
    bool is_mds;
    MdsMethod method;
    /// First failing k-subset in lexicographic order (0-based), when not MDS
    /// and the method inspects subsets.
    std::optional<std::vector<std::size_t>> witness;

    const char* method_name() const;
};

/// Decides MDS-ness by the requested route. The criterion route requires
/// 3 ≤ k (the underlying statement's hypothesis) and directs callers to the
/// minors route otherwise; the exhaustive route requires the enumeration to
/// fit under the cap.
MdsCertificate is_mds(const TgrsCode& code, MdsMethod method,
                      std::uint64_t distance_cap = kDefaultDistanceCap);

/// Criterion when 3 ≤ k, minors otherwise.
MdsCertificate is_mds_auto(const TgrsCode& code);

/// Conjunction of the Hermitian self-duality certificate and the MDS decision.
std::pair<DualityCertificate, MdsCertificate> is_mds_hermitian_self_dual(const TgrsCode& code);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

}  // namespace tgrs
