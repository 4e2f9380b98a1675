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

#include "tgrs/code.hpp"

#include <algorithm>

namespace tgrs {

FieldMatrix twist_from_hooks(const HookTwistSpec& spec, std::size_t n, std::size_t k, const FieldTower* tower) {
    if (spec.eta.size() != spec.hooks.size() || spec.eta.size() != spec.twists.size())
        throw ValidationError("hook/twist/eta vectors must have equal length");
    FieldMatrix a(tower, k, n - k);
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t j = 0; j < spec.eta.size(); ++j) {
        const std::size_t h = spec.hooks[j], t = spec.twists[j];
        if (h >= k) throw ValidationError("hook index out of range [0, k-1]");
        if (t < 1 || t > n - k) throw ValidationError("twist index out of range [1, n-k]");
        if (spec.eta[j].is_zero()) throw ValidationError("twist coefficients must be nonzero");
        if (std::find(seen.begin(), seen.end(), std::make_pair(h, t)) != seen.end())
            throw ValidationError("duplicate (hook, twist) pair");
        seen.emplace_back(h, t);
        a(h, t - 1) = spec.eta[j];
    }
    return a;
}

std::vector<FieldElement> u_vector(std::span<const FieldElement> alpha) {
    const std::size_t n = alpha.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (alpha[i] == alpha[j]) throw ValidationError("evaluation points must be distinct");
    std::vector<FieldElement> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement prod = alpha[i].tower().one();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod *= alpha[i] - alpha[j];
        u.push_back(inv(prod));
    }
    return u;
}

namespace {

FieldMatrix build_generator(const FieldTower* t, const std::vector<FieldElement>& alpha,
                            const std::vector<FieldElement>& v, const FieldMatrix& twist) {
    const std::size_t n = alpha.size(), k = twist.rows();
    FieldMatrix left(t, k, n);  // [I_k | A]
    for (std::size_t r = 0; r < k; ++r) {
        left(r, r) = t->one();
        for (std::size_t c = 0; c < n - k; ++c) left(r, k + c) = twist(r, c);
    }
    return left * FieldMatrix::vandermonde(alpha, n) * FieldMatrix::diagonal(v);
}

FieldMatrix build_parity(const FieldTower* t, const std::vector<FieldElement>& alpha,
                         const std::vector<FieldElement>& v, const FieldMatrix& twist) {
    const std::size_t n = alpha.size(), k = twist.rows(), r = n - k;
    FieldMatrix jr = FieldMatrix::exchange(t, r);
    FieldMatrix jk = FieldMatrix::exchange(t, k);
    FieldMatrix right = (jr * twist.transpose() * jk).scaled(-t->one());
    FieldMatrix left(t, r, n);  // [I_{n-k} | -J_{n-k} Aᵀ J_k]
    for (std::size_t i = 0; i < r; ++i) {
        left(i, i) = t->one();
        for (std::size_t c = 0; c < k; ++c) left(i, r + c) = right(i, c);
    }
    std::vector<FieldElement> u = u_vector(alpha);
    std::vector<FieldElement> uv;
    uv.reserve(n);
    for (std::size_t i = 0; i < n; ++i) uv.push_back(u[i] / v[i]);
    return left * coefficient_toeplitz(alpha) * FieldMatrix::vandermonde(alpha, n) * FieldMatrix::diagonal(uv);
}

}  // namespace

TgrsCode::TgrsCode(const FieldTower* tower, std::vector<FieldElement> alpha, std::vector<FieldElement> v,
                   FieldMatrix twist)
    : tower_(tower), alpha_(std::move(alpha)), v_(std::move(v)), twist_(std::move(twist)) {
    const std::size_t n = alpha_.size(), k = twist_.rows();
    if (n < 2 || k < 1 || k >= n) throw ValidationError("need 1 <= k < n and n >= 2");
    if (n > tower_->size()) throw ValidationError("more evaluation points than field elements");
    if (v_.size() != n) throw ValidationError("v must have length n");
    if (twist_.cols() != n - k) throw ValidationError("twist matrix must be k x (n-k)");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (alpha_[i] == alpha_[j]) throw ValidationError("alpha not distinct");
    for (const auto& x : v_)
        if (x.is_zero()) throw ValidationError("column multipliers must be nonzero");

    generator_ = build_generator(tower_, alpha_, v_, twist_);
    parity_ = build_parity(tower_, alpha_, v_, twist_);
    if (generator_.rank() != k) throw Error("generator matrix is rank-deficient");
    if (!(generator_ * parity_.transpose()).is_zero()) throw Error("parity-check identity G·Hᵀ = 0 failed");
}

std::vector<FieldElement> TgrsCode::encode(std::span<const FieldElement> message) const {
    const std::size_t n = this->n(), k = this->k();
    if (message.size() != k) throw ValidationError("message length must be k");

    // matrix path: f · G
    std::vector<FieldElement> word(n, tower_->zero());
    for (std::size_t i = 0; i < k; ++i) {
        if (message[i].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) word[c] += message[i] * generator_(i, c);
    }

    // polynomial path: evaluate Σ f_i x^i + Σ_i f_i Σ_j η_{i,j} x^{k-1+j}
    std::vector<FieldElement> poly(n, tower_->zero());
    for (std::size_t i = 0; i < k; ++i) {
        poly[i] += message[i];
        for (std::size_t j = 1; j <= n - k; ++j) poly[k - 1 + j] += message[i] * twist_(i, j - 1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        FieldElement value = poly_eval(poly, alpha_[c]) * v_[c];
        if (value != word[c]) throw Error("encode: matrix and polynomial paths disagree");
    }
    return word;
}

DualSpaces TgrsCode::dual_spaces() const {
    FieldMatrix gq = entrywise_pow_q(generator_);
    return DualSpaces{generator_.null_space(), gq, gq.null_space()};
}

std::optional<std::size_t> TgrsCode::min_distance_exhaustive(std::uint64_t cap) const {
    const std::size_t n = this->n(), k = this->k();
    const std::uint64_t field = tower_->size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= field;
        if (total - 1 > cap) return std::nullopt;
    }

    // Scalar multiples share a weight, so enumerate only messages whose first
    // nonzero coefficient is 1.
    std::size_t best = n + 1;
    std::vector<FieldElement> partial(n, tower_->zero());
    auto weight = [&] {
        std::size_t w = 0;
        for (const auto& x : partial) w += !x.is_zero();
        return w;
    };
    auto add_row = [&](std::size_t row, const FieldElement& f, int sign) {
        for (std::size_t c = 0; c < n; ++c) {
            if (sign > 0) partial[c] += f * generator_(row, c);
            else partial[c] -= f * generator_(row, c);
        }
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            best = std::min(best, weight());
            return;
        }
        for (std::uint32_t r = 0; r < field; ++r) {
            FieldElement f = tower_->element_at(r);
            if (!f.is_zero()) add_row(i, f, +1);
            self(self, i + 1);
            if (!f.is_zero()) add_row(i, f, -1);
        }
    };
    for (std::size_t first = 0; first < k; ++first) {
        add_row(first, tower_->one(), +1);
        rec(rec, first + 1);
        add_row(first, tower_->one(), -1);
    }
    return best;
}

bool codes_equal(const FieldMatrix& g1, const FieldMatrix& g2) { return same_row_space(g1, g2); }

}  // namespace tgrs
