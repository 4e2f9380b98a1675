// Test-side oracles, deliberately independent of the library internals.
// Everything here works on plain int coefficient vectors mod p and only uses
// the library to convert elements to/from coefficients.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tgrs/code.hpp"
#include "tgrs/field.hpp"
#include "tgrs/matrix.hpp"

namespace oracles {

using tgrs::FieldElement;
using tgrs::FieldMatrix;
using tgrs::FieldTower;
using tgrs::TgrsCode;

// Schoolbook product of two coefficient vectors mod p, reduced by the tower's
// modulus via polynomial long division. No lookup tables involved.
inline std::vector<int> naive_mul(const FieldTower& t, std::vector<int> a, std::vector<int> b) {
    const int p = t.p();
    const auto& mod = t.modulus();
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    while (r.size() >= mod.size()) {
        int c = r.back();  // modulus is monic
        size_t shift = r.size() - mod.size();
        for (size_t i = 0; i < mod.size(); ++i) r[shift + i] = ((r[shift + i] - c * mod[i]) % p + p) % p;
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    r.resize(t.m(), 0);
    return r;
}

inline FieldElement naive_mul(const FieldElement& a, const FieldElement& b) {
    return a.tower().from_coeffs(naive_mul(a.tower(), a.coeffs(), b.coeffs()));
}

inline FieldElement naive_pow(const FieldElement& x, long n) {
    FieldElement acc = x.tower().one();
    for (long i = 0; i < n; ++i) acc = naive_mul(acc, x);
    return acc;
}

// Determinant by cofactor expansion along the first row.
inline FieldElement naive_det(const FieldMatrix& a) {
    const size_t n = a.rows();
    if (n == 1) return a(0, 0);
    FieldElement acc = a.tower().zero();
    for (size_t j = 0; j < n; ++j) {
        FieldMatrix minor(a.tower_ptr(), n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        FieldElement term = a(0, j) * naive_det(minor);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline FieldElement random_element(const FieldTower& t, std::mt19937_64& g) {
    return t.element_at((std::uint32_t)(g() % t.size()));
}

inline FieldElement random_nonzero(const FieldTower& t, std::mt19937_64& g) {
    return t.element_at(1 + (std::uint32_t)(g() % (t.size() - 1)));
}

inline std::vector<FieldElement> random_distinct(const FieldTower& t, size_t n, std::mt19937_64& g) {
    std::vector<std::uint32_t> ranks(t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) ranks[i] = i;
    std::shuffle(ranks.begin(), ranks.end(), g);
    std::vector<FieldElement> out;
    for (size_t i = 0; i < n; ++i) out.push_back(t.element_at(ranks[i]));
    return out;
}

inline FieldMatrix random_matrix(const FieldTower& t, size_t rows, size_t cols, std::mt19937_64& g) {
    FieldMatrix a(&t, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) a(r, c) = random_element(t, g);
    return a;
}

// Uniformly random A-TGRS code: distinct evaluation points, nonzero column
// multipliers, arbitrary twist matrix (possibly zero).
inline TgrsCode random_code(const FieldTower& t, size_t n, size_t k, std::mt19937_64& g) {
    auto alpha = random_distinct(t, n, g);
    std::vector<FieldElement> v;
    for (size_t i = 0; i < n; ++i) v.push_back(random_nonzero(t, g));
    FieldMatrix twist = random_matrix(t, k, n - k, g);
    return TgrsCode(&t, std::move(alpha), std::move(v), std::move(twist));
}

// Codeword weight table by brute-force evaluation of every message, using the
// polynomial definition only (no generator matrix involved).
inline size_t naive_min_distance(const TgrsCode& code) {
    const FieldTower& t = code.tower();
    const size_t n = code.n(), k = code.k();
    size_t best = n + 1;
    std::vector<std::uint32_t> msg(k, 0);
    while (true) {
        size_t pos = 0;
        while (pos < k && msg[pos] == t.size() - 1) msg[pos++] = 0;
        if (pos == k) break;
        ++msg[pos];
        // evaluate the twisted polynomial at every alpha
        size_t w = 0;
        for (size_t c = 0; c < n; ++c) {
            FieldElement acc = t.zero();
            for (size_t i = 0; i < k; ++i) {
                FieldElement fi = t.element_at(msg[i]);
                if (fi.is_zero()) continue;
                acc += fi * tgrs::pow(code.alpha()[c], (long)i);
                for (size_t j = 1; j <= n - k; ++j)
                    acc += fi * code.twist()(i, j - 1) * tgrs::pow(code.alpha()[c], (long)(k - 1 + j));
            }
            w += !(acc * code.v()[c]).is_zero();
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace oracles
