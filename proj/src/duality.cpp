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

#include "tgrs/duality.hpp"

namespace tgrs {

const char* DualityCertificate::reason_name() const {
    switch (reason) {
        case DualityFailure::none: return "none";
        case DualityFailure::dimension: return "dimension";
        case DualityFailure::nonzero_gram: return "nonzero-gram";
        case DualityFailure::rank: return "rank";
    }
    return "unknown";
}

DualityCertificate is_hermitian_self_dual(const TgrsCode& code) {
    const auto& t = code.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("Hermitian duality requires a quadratic tower");
    const FieldMatrix& g = code.generator_matrix();
    FieldMatrix gram = g * entrywise_pow_q(g).transpose();

    DualityCertificate cert{DualityKind::hermitian, false, gram, std::nullopt, DualityFailure::none};
    if (code.n() != 2 * code.k()) {
        cert.reason = DualityFailure::dimension;
        return cert;
    }
    if (!gram.is_zero()) {
        cert.reason = DualityFailure::nonzero_gram;
        return cert;
    }
    cert.self_dual = true;
    cert.p_matrix = hermitian_certificate_p(code);
    if (!cert.p_matrix) throw Error("Gram test and P certificate disagree (P missing)");
    return cert;
}

DualityCertificate is_euclidean_self_dual(const TgrsCode& code) {
    const FieldMatrix& g = code.generator_matrix();
    FieldMatrix gram = g * g.transpose();
    DualityCertificate cert{DualityKind::euclidean, false, gram, std::nullopt, DualityFailure::none};
    if (code.n() != 2 * code.k()) {
        cert.reason = DualityFailure::dimension;
        return cert;
    }
    if (!gram.is_zero()) {
        cert.reason = DualityFailure::nonzero_gram;
        return cert;
    }
    cert.self_dual = true;
    return cert;
}

std::optional<FieldMatrix> hermitian_certificate_p(const TgrsCode& code) {
    const auto& t = code.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("Hermitian duality requires a quadratic tower");
    const std::size_t n = code.n(), k = code.k();
    if (n != 2 * k) throw PreconditionError("P certificate requires n = 2k");
    const FieldTower* tp = code.tower_ptr();

    // L = [I_k | A^q] · V_n(α)^q · diag(v^{q+1}/u)
    FieldMatrix aq = entrywise_pow_q(code.twist());
    FieldMatrix left(tp, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        left(r, r) = tp->one();
        for (std::size_t c = 0; c < k; ++c) left(r, k + c) = aq(r, c);
    }
    std::vector<FieldElement> u = u_vector(code.alpha());
    std::vector<FieldElement> scale;
    scale.reserve(n);
    for (std::size_t i = 0; i < n; ++i) scale.push_back(norm_q(code.v()[i]) / u[i]);
    FieldMatrix vq = entrywise_pow_q(FieldMatrix::vandermonde(code.alpha(), n));
    FieldMatrix l = left * vq * FieldMatrix::diagonal(scale);

    // R = [I_k | -J·Aᵀ·J] · T(α) · V_n(α)
    FieldMatrix jk = FieldMatrix::exchange(tp, k);
    FieldMatrix mj = (jk * code.twist().transpose() * jk).scaled(-tp->one());
    FieldMatrix rleft(tp, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        rleft(i, i) = tp->one();
        for (std::size_t c = 0; c < k; ++c) rleft(i, k + c) = mj(i, c);
    }
    FieldMatrix r = rleft * coefficient_toeplitz(code.alpha()) * FieldMatrix::vandermonde(code.alpha(), n);

    // Solve P from the leftmost independent columns of R, then verify fully.
    std::vector<std::size_t> pivots = r.rref().pivot_cols;
    if (pivots.size() < k) return std::nullopt;  // cannot happen for valid codes
    FieldMatrix rsel = r.select_columns(pivots);
    FieldMatrix lsel = l.select_columns(pivots);
    FieldMatrix p(tp, k, k);
    try {
        p = lsel * rsel.inverse();
    } catch (const SingularMatrixError&) {
        return std::nullopt;
    }
    if (p * r != l) return std::nullopt;
    if (p.det().is_zero()) return std::nullopt;
    return p;
}

}  // namespace tgrs
