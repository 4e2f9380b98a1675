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
 * @file root_sets.hpp
 * @brief Solution sets of x^Q = a·x + b in F_{q²} and their coset structure.
 *
 * For a Frobenius power Q (the tower's q by default, or a smaller p-power for
 * intermediate subfields), the solution set of x^Q - ax - b is empty, a single
 * point, or a coset of the additive subgroup U_{(a,Q)}^0 of size Q. Roots are
 * found by exhaustive scan; the fields here are tiny and the scan doubles as
 * its own oracle.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tgrs/field.hpp"

namespace tgrs {

/// The set U_{(a,Q)}^b = {x : x^Q = a·x + b}, stored in lexicographic order.
struct RootSet {
    FieldElement a;
    FieldElement b;
    std::uint32_t sub_q;  // the Frobenius power Q
    std::vector<FieldElement> roots;

    bool contains(const FieldElement& x) const;
};

/// All roots of x^Q - a·x - b = 0 in the tower. Q defaults to the tower's q.
RootSet affine_frobenius_roots(const FieldElement& a, const FieldElement& b);
RootSet affine_frobenius_roots(const FieldElement& a, const FieldElement& b, std::uint32_t sub_q);

/// The exact criterion for more than one root: a^{Q+1} = 1 and b^Q + a^Q·b = 0.
bool multiple_roots_predicate(const FieldElement& a, const FieldElement& b);
bool multiple_roots_predicate(const FieldElement& a, const FieldElement& b, std::uint32_t sub_q);

/// The admissible set A_{(a,q)} = {b : b^q + a^q·b = 0} together with the
/// coset decomposition F_{q²} = ⋃_b U_{(a,q)}^b. Requires a^{q+1} = 1.
/// Verifies that the cosets are disjoint, each of size q, and cover the field.
struct CosetPartition {
    FieldElement a;
    std::vector<FieldElement> admissible;  // A_{(a,q)}, lexicographic
    std::vector<RootSet> cosets;           // aligned with admissible
};
CosetPartition coset_partition(const FieldElement& a);

/// The smallest i ≥ 0 with ε^{i(q-1)} = a, where ε is the tower's primitive
/// element; also checks ε^i · U_{(1,q)}^0 = U_{(a,q)}^0 setwise.
/// Requires a^{q+1} = 1.
long scale_index(const FieldElement& a);

}  // namespace tgrs
