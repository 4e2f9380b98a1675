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
 * @file field.hpp
 * @brief Exact arithmetic in towers F_p ⊂ F_q ⊂ F_{q²} of small finite fields.
 *
 * A FieldTower fixes a prime p, a subfield degree e (q = p^e) and a monic
 * irreducible modulus of degree m over F_p, where m = 2e for the quadratic
 * (Hermitian) tower or m = e for plain-F_q work. Elements are coefficient
 * vectors over F_p in the basis 1, x, ..., x^{m-1}; subfield elements are the
 * fixed points of x ↦ x^q, with no separate representation.
 *
 * Multiplication, inversion and powers go through a full discrete-log table
 * built lazily per tower (all supported fields have at most ~2^16 elements).
 * Towers are immutable once constructed and safe to share across threads.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgrs/errors.hpp"

namespace tgrs {

class FieldTower;

/// One element of a FieldTower, stored as a canonical index.
///
/// The index is the mixed-radix encoding of the little-endian coefficient
/// sequence (c_0, ..., c_{m-1}) with c_0 most significant, so the numeric
/// order of indices is the lexicographic order on coefficient sequences.
class FieldElement {
   public:
    FieldElement() = default;  // detached; usable only after assignment
    FieldElement(const FieldTower* tower, std::uint32_t index) : tower_(tower), index_(index) {}

    const FieldTower& tower() const { return *tower_; }
    const FieldTower* tower_ptr() const { return tower_; }
    std::uint32_t index() const { return index_; }

    bool is_zero() const { return index_ == 0; }
    std::vector<int> coeffs() const;  // little-endian, length m

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    /// Lexicographic order on little-endian coefficient sequences.
    friend bool operator<(const FieldElement& a, const FieldElement& b);

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    std::string str() const;  // "c0,c1,...,c{m-1}"

   private:
    const FieldTower* tower_ = nullptr;
    std::uint32_t index_ = 0;
};

/// The chain F_p ⊂ F_q ⊂ F_{q²} (or just F_p ⊂ F_q when quadratic = false),
/// with a fixed monic irreducible modulus over F_p hosting all arithmetic.
class FieldTower {
   public:
    /// Returns the cached tower for (p, e, quadratic, modulus), constructing
    /// it on first use. When no modulus is given, the lexicographically first
    /// monic irreducible polynomial of the right degree is selected.
    static std::shared_ptr<const FieldTower> make(int p, int e, bool quadratic,
                                                  std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int e() const { return e_; }
    int m() const { return m_; }
    std::uint32_t q() const { return q_; }        // p^e
    std::uint32_t size() const { return size_; }  // p^m
    bool has_quadratic_subfield() const { return m_ == 2 * e_; }
    /// Monic modulus, little-endian, length m+1, leading coefficient 1.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const;
    /// Embeds an integer as a constant polynomial (reduced mod p).
    FieldElement from_int(long value) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    /// Element with the given lexicographic rank (0 = zero element).
    FieldElement element_at(std::uint32_t lex_rank) const;
    /// All p^m elements in lexicographic order.
    std::vector<FieldElement> all_elements() const;

    /// Lexicographically smallest element of multiplicative order p^m - 1.
    FieldElement primitive_element() const;

    bool same_tower(const FieldTower& other) const;

    // Index-level arithmetic used by FieldElement and the matrix kernel.
    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_idx(std::uint32_t a) const;
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_idx(std::uint32_t a) const;
    std::uint32_t pow_idx(std::uint32_t a, long n) const;
    /// Discrete log to the primitive element; a must be nonzero.
    std::uint32_t log_idx(std::uint32_t a) const;

   private:
    FieldTower(int p, int e, bool quadratic, std::vector<int> modulus);
    void build_log_tables() const;

    int p_, e_, m_;
    std::uint32_t q_, size_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> digits_;  // size_ * m_, little-endian digits per index

    mutable std::once_flag log_once_;
    mutable std::vector<std::uint32_t> exp_;  // exp_[j] = ε^j, j in [0, size-1)
    mutable std::vector<std::uint32_t> log_;  // log_[x] for x ≠ 0
    mutable std::uint32_t primitive_idx_ = 0;

    friend class FieldElement;
};

// --- element-level operations ---------------------------------------------

FieldElement pow(const FieldElement& x, long n);
FieldElement inv(const FieldElement& x);

/// Frobenius conjugate x ↦ x^q over the designated subfield. Involutive.
FieldElement conjugate_q(const FieldElement& x);
/// Relative norm x ↦ x^{q+1}; lands in F_q.
FieldElement norm_q(const FieldElement& x);
/// Relative trace x ↦ x + x^q; lands in F_q.
FieldElement trace_q(const FieldElement& x);
/// Membership test for the designated subfield: x^q = x.
bool in_subfield(const FieldElement& x);

/// All solutions of x^{q+1} = c. For c = 0 returns {0}; c outside F_q has no
/// solutions and raises NoSolutionError. Results in lexicographic order.
std::vector<FieldElement> solve_norm_equation(const FieldElement& c);

/// All x in the tower with x^n = c, in lexicographic order (possibly empty).
std::vector<FieldElement> nth_roots(const FieldElement& c, long n);

/// Multiplicative order of a nonzero element.
std::uint32_t multiplicative_order(const FieldElement& x);

// --- small polynomial helpers over a tower --------------------------------
// Polynomials are coefficient vectors in ascending degree order.

std::vector<FieldElement> poly_mul(std::span<const FieldElement> a, std::span<const FieldElement> b);
/// Expands the monic polynomial ∏ (x - r_i); result has degree = #roots.
std::vector<FieldElement> poly_from_roots(std::span<const FieldElement> roots);
FieldElement poly_eval(std::span<const FieldElement> poly, const FieldElement& x);
std::vector<FieldElement> poly_derivative(std::span<const FieldElement> poly);

namespace detail {
void require_same_tower(const FieldElement& a, const FieldElement& b);
}  // namespace detail

}  // namespace tgrs
