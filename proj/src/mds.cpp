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

#include "tgrs/mds.hpp"

#include <algorithm>

namespace tgrs {

const char* MdsCertificate::method_name() const {
    switch (method) {
        case MdsMethod::criterion: return "criterion";
        case MdsMethod::minors: return "minors";
        case MdsMethod::exhaustive: return "exhaustive";
    }
    return "unknown";
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] != i + n - k) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

SubsetData subset_data(std::span<const FieldElement> alpha, std::vector<std::size_t> indices) {
    if (indices.empty()) throw ValidationError("subset must be nonempty");
    std::sort(indices.begin(), indices.end());
    const std::size_t k = indices.size();
    const FieldTower* t = alpha[0].tower_ptr();

    std::vector<FieldElement> pts;
    pts.reserve(k);
    for (std::size_t i : indices) {
        if (i >= alpha.size()) throw ValidationError("subset index out of range");
        pts.push_back(alpha[i]);
    }
    // ascending g: ∏(x - α_i) = Σ g[s] x^s; paper order c_j = g[k - j]
    std::vector<FieldElement> g = poly_from_roots(pts);
    std::vector<FieldElement> c(k + 1, t->zero()), d(k + 1, t->zero());
    for (std::size_t j = 0; j <= k; ++j) c[j] = g[k - j];
    for (std::size_t j = 0; j <= k; ++j) d[j] = c[k - j];

    FieldMatrix companion(t, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) companion(i, i + 1) = t->one();
    for (std::size_t j = 0; j < k; ++j) companion(k - 1, j) = -c[k - j];
    return SubsetData{std::move(indices), std::move(c), std::move(d), std::move(companion)};
}

FieldMatrix mds_correction_table(const FieldMatrix& twist, const SubsetData& data) {
    const FieldTower* t = twist.tower_ptr();
    const std::size_t k = twist.rows();
    const std::size_t w = twist.cols();  // n - k
    if (data.companion.rows() != k) throw UsageError("subset size must equal the code dimension");

    FieldMatrix table(t, k, k);
    for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t tt = 1; tt <= k; ++tt) {
            // a^l = Σ_{i+j=l, 1 ≤ i ≤ n-k, 0 ≤ j ≤ t-1} η_{m,i} d_j, with d_j = 0
            // outside 0..k; F coefficients are a^{t}, ..., a^{n-k+t-1}
            std::vector<FieldElement> coef(w, t->zero());
            for (std::size_t s = 0; s < w; ++s) {
                const std::size_t l = s + tt;
                FieldElement acc = t->zero();
                for (std::size_t i = 1; i <= w && i <= l; ++i) {
                    const std::size_t j = l - i;
                    if (j > tt - 1 || j > k) continue;
                    acc += twist(m, i - 1) * data.d[j];
                }
                coef[s] = acc;
            }
            // Horner evaluation of F at the companion matrix
            FieldMatrix f(t, k, k);
            for (std::size_t i = 0; i < k; ++i) f(i, i) = coef[w - 1];
            for (std::size_t s = w - 1; s-- > 0;) {
                f = f * data.companion;
                for (std::size_t i = 0; i < k; ++i) f(i, i) += coef[s];
            }
            table(m, tt - 1) = -f(k - 1, k - 1);
        }
    }
    return table;
}

FieldElement mds_subset_determinant(const TgrsCode& code, std::vector<std::size_t> indices) {
    if (indices.size() != code.k()) throw ValidationError("subset size must equal k");
    SubsetData data = subset_data(code.alpha(), std::move(indices));
    FieldMatrix table = mds_correction_table(code.twist(), data);
    const FieldTower* t = code.tower_ptr();
    const std::size_t k = code.k();
    FieldMatrix m(t, k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            m(r, c) = table(r, c);
            if (c == r) m(r, c) += t->one();
        }
    return m.det();
}

MdsCertificate is_mds(const TgrsCode& code, MdsMethod method, std::uint64_t distance_cap) {
    const std::size_t n = code.n(), k = code.k();
    switch (method) {
        case MdsMethod::criterion: {
            if (k < 3)
                throw PreconditionError("subset-determinant criterion is stated for 3 <= k; use the minors method");
            for (auto& subset : k_subsets(n, k)) {
                if (mds_subset_determinant(code, subset).is_zero())
                    return {false, method, std::move(subset)};
            }
            return {true, method, std::nullopt};
        }
        case MdsMethod::minors: {
            const FieldMatrix& g = code.generator_matrix();
            for (auto& subset : k_subsets(n, k)) {
                if (g.select_columns(subset).det().is_zero()) return {false, method, std::move(subset)};
            }
            return {true, method, std::nullopt};
        }
        case MdsMethod::exhaustive: {
            auto d = code.min_distance_exhaustive(distance_cap);
            if (!d)
                throw PreconditionError("enumeration exceeds the distance cap; use the minors or criterion method");
            return {*d == n - k + 1, method, std::nullopt};
        }
    }
    throw UsageError("unknown MDS method");
}

MdsCertificate is_mds_auto(const TgrsCode& code) {
    return is_mds(code, code.k() >= 3 ? MdsMethod::criterion : MdsMethod::minors);
}

std::pair<DualityCertificate, MdsCertificate> is_mds_hermitian_self_dual(const TgrsCode& code) {
    return {is_hermitian_self_dual(code), is_mds_auto(code)};
}

}  // namespace tgrs
