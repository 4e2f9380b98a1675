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

#include "tgrs/root_sets.hpp"

#include <algorithm>
#include <set>

namespace tgrs {

bool RootSet::contains(const FieldElement& x) const {
    return std::binary_search(roots.begin(), roots.end(), x);
}

RootSet affine_frobenius_roots(const FieldElement& a, const FieldElement& b) {
    const auto& t = a.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("affine Frobenius roots require a quadratic tower");
    return affine_frobenius_roots(a, b, t.q());
}

RootSet affine_frobenius_roots(const FieldElement& a, const FieldElement& b, std::uint32_t sub_q) {
    detail::require_same_tower(a, b);
    const auto& t = a.tower();
    RootSet out{a, b, sub_q, {}};
    for (const auto& x : t.all_elements())
        if (pow(x, (long)sub_q) == a * x + b) out.roots.push_back(x);
    return out;  // all_elements is already in lexicographic order
}

bool multiple_roots_predicate(const FieldElement& a, const FieldElement& b) {
    const auto& t = a.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("multiple_roots_predicate requires a quadratic tower");
    return multiple_roots_predicate(a, b, t.q());
}

bool multiple_roots_predicate(const FieldElement& a, const FieldElement& b, std::uint32_t sub_q) {
    detail::require_same_tower(a, b);
    const auto& t = a.tower();
    const long q = (long)sub_q;
    return pow(a, q + 1) == t.one() && (pow(b, q) + pow(a, q) * b).is_zero();
}

CosetPartition coset_partition(const FieldElement& a) {
    const auto& t = a.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("coset_partition requires a quadratic tower");
    const long q = (long)t.q();
    if (pow(a, q + 1) != t.one()) throw PreconditionError("coset_partition requires a^{q+1} = 1");

    CosetPartition part{a, {}, {}};
    for (const auto& b : t.all_elements())
        if ((pow(b, q) + pow(a, q) * b).is_zero()) part.admissible.push_back(b);
    if (part.admissible.size() != (size_t)t.q())
        throw Error("admissible set has unexpected size " + std::to_string(part.admissible.size()));

    std::set<FieldElement> seen;
    for (const auto& b : part.admissible) {
        RootSet coset = affine_frobenius_roots(a, b);
        if (coset.roots.size() != (size_t)t.q())
            throw Error("coset has unexpected size " + std::to_string(coset.roots.size()));
        for (const auto& x : coset.roots)
            if (!seen.insert(x).second) throw Error("cosets are not disjoint");
        part.cosets.push_back(std::move(coset));
    }
    if (seen.size() != (size_t)t.size()) throw Error("cosets do not cover the field");
    return part;
}

long scale_index(const FieldElement& a) {
    const auto& t = a.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("scale_index requires a quadratic tower");
    const long q = (long)t.q();
    if (pow(a, q + 1) != t.one()) throw PreconditionError("scale_index requires a^{q+1} = 1");

    FieldElement eps = t.primitive_element();
    long i_a = -1;
    for (long i = 0; i <= q + 1; ++i) {
        if (pow(eps, i * (q - 1)) == a) {
            i_a = i;
            break;
        }
    }
    if (i_a < 0) throw Error("no scale index found (unreachable for a of norm 1)");

    // setwise check: ε^{i_a} · U_{(1,q)}^0 = U_{(a,q)}^0
    RootSet u1 = affine_frobenius_roots(t.one(), t.zero());
    RootSet ua = affine_frobenius_roots(a, t.zero());
    std::set<FieldElement> scaled;
    FieldElement s = pow(eps, i_a);
    for (const auto& x : u1.roots) scaled.insert(s * x);
    if (scaled != std::set<FieldElement>(ua.roots.begin(), ua.roots.end()))
        throw Error("scale index does not map U_{(1,q)}^0 onto U_{(a,q)}^0");
    return i_a;
}

}  // namespace tgrs
