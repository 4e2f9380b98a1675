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
 * @file duality.hpp
 * @brief Hermitian and Euclidean self-duality certificates.
 *
 * Self-duality is decided by the Gram product: C is Hermitian self-dual iff
 * n = 2k and G·(G^q)ᵀ = 0 (Euclidean: G·Gᵀ = 0). For the Hermitian case an
 * independent witness is also produced: the invertible matrix P with
 *
 *   [I_k | A^q]·V_n(α)^q·diag(v^{q+1}/u) = P·[I_k | -J·Aᵀ·J]·T(α)·V_n(α),
 *
 * which exists iff the code is Hermitian self-dual. The two routes are
 * computed independently and must agree.
 */

#pragma once

#include <optional>

#include "tgrs/code.hpp"

namespace tgrs {

enum class DualityKind { hermitian, euclidean };
enum class DualityFailure { none, dimension, nonzero_gram, rank };

struct DualityCertificate {
    DualityKind kind;
    bool self_dual;
    FieldMatrix gram;                     // k×k; zero iff self-orthogonal
    std::optional<FieldMatrix> p_matrix;  // Hermitian witness, present when self-dual
    DualityFailure reason;                // none when self_dual

    const char* reason_name() const;
};

/// Gram test G·(G^q)ᵀ = 0 with the dimension condition n = 2k; attaches the
/// invertible-P witness on success. Requires a quadratic tower.
DualityCertificate is_hermitian_self_dual(const TgrsCode& code);

/// Gram test G·Gᵀ = 0 with the dimension condition n = 2k.
DualityCertificate is_euclidean_self_dual(const TgrsCode& code);

/// The invertible P relating the q-power generator to the parity-check frame,
/// solved from the leftmost independent columns and then verified on all n
/// columns. Returns nothing when no such P exists. Requires n = 2k.
std::optional<FieldMatrix> hermitian_certificate_p(const TgrsCode& code);

}  // namespace tgrs
