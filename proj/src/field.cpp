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

#include "tgrs/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace tgrs {

namespace {

// ---- integer polynomial arithmetic mod p (modulus validation / search) ----
// Little-endian coefficient vectors with entries in [0, p).

using IPoly = std::vector<int>;

void iprune(IPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

IPoly imul(const IPoly& a, const IPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    iprune(r);
    return r;
}

IPoly imod(IPoly a, const IPoly& f, int p) {
    iprune(a);
    const int lead_inv = [&] {
        int l = f.back(), r = 1;  // l^{p-2} mod p
        for (int k = 0; k < p - 2; ++k) r = r * l % p;
        return r;
    }();
    while (a.size() >= f.size()) {
        int c = a.back() * lead_inv % p;
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        iprune(a);
    }
    return a;
}

IPoly igcd(IPoly a, IPoly b, int p) {
    iprune(a);
    iprune(b);
    while (!b.empty()) {
        IPoly r = imod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^i} mod f for i = 1..count, starting from x.
IPoly frobenius_step(const IPoly& g, const IPoly& f, int p) {
    // g^p mod f by square-and-multiply on the exponent p.
    IPoly result = {1};
    IPoly base = g;
    int n = p;
    while (n > 0) {
        if (n & 1) result = imod(imul(result, base, p), f, p);
        base = imod(imul(base, base, p), f, p);
        n >>= 1;
    }
    return result;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// f monic of degree m is irreducible over F_p iff gcd(f, x^{p^i} - x) is
// trivial for every 1 <= i < m (any proper factor of degree d < m would
// appear in the gcd at i = d).
bool is_irreducible(const IPoly& f, int p) {
    const int m = (int)f.size() - 1;
    if (m < 1) return false;
    if (m == 1) return true;
    IPoly xp = {0, 1};  // running x^{p^i} mod f
    for (int i = 1; i < m; ++i) {
        xp = frobenius_step(xp, f, p);
        IPoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;  // x^{p^i} - x
        IPoly g = igcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// First monic irreducible of degree m over F_p in lexicographic order on the
// little-endian coefficient sequence (c_0, ..., c_{m-1}).
IPoly find_modulus(int p, int m) {
    std::vector<int> c(m, 0);
    while (true) {
        IPoly f(c.begin(), c.end());
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        int i = m - 1;  // lex order advances the last coordinate fastest
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw Error("no irreducible modulus found (unreachable)");
        ++c[i];
    }
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) n /= d, ++k;
            fs.emplace_back(d, k);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

constexpr std::uint32_t kMaxFieldSize = 1u << 20;

}  // namespace

// --- FieldElement -----------------------------------------------------------

std::vector<int> FieldElement::coeffs() const {
    const auto& t = *tower_;
    std::vector<int> c(t.m());
    for (int i = 0; i < t.m(); ++i) c[i] = t.digits_[(size_t)index_ * t.m() + i];
    return c;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    detail::require_same_tower(a, b);
    return a.index_ == b.index_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    detail::require_same_tower(a, b);
    return a.index_ < b.index_;
}

FieldElement FieldElement::operator-() const { return FieldElement(tower_, tower_->neg_idx(index_)); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    detail::require_same_tower(*this, rhs);
    index_ = tower_->add_idx(index_, rhs.index_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    detail::require_same_tower(*this, rhs);
    index_ = tower_->sub_idx(index_, rhs.index_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    detail::require_same_tower(*this, rhs);
    index_ = tower_->mul_idx(index_, rhs.index_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    detail::require_same_tower(*this, rhs);
    index_ = tower_->mul_idx(index_, tower_->inv_idx(rhs.index_));
    return *this;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    auto c = coeffs();
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os.str();
}

namespace detail {
void require_same_tower(const FieldElement& a, const FieldElement& b) {
    if (a.tower_ptr() == b.tower_ptr()) return;
    if (a.tower_ptr() == nullptr || b.tower_ptr() == nullptr || !a.tower().same_tower(b.tower()))
        throw UsageError("elements belong to different field towers");
}
}  // namespace detail

// --- FieldTower --------------------------------------------------------------

FieldTower::FieldTower(int p, int e, bool quadratic, std::vector<int> modulus)
    : p_(p), e_(e), m_(quadratic ? 2 * e : e), modulus_(std::move(modulus)) {
    std::uint64_t q = 1, size = 1;
    for (int i = 0; i < e_; ++i) q *= (std::uint64_t)p_;
    for (int i = 0; i < m_; ++i) size *= (std::uint64_t)p_;
    if (size > kMaxFieldSize) throw ValidationError("field too large: p^m exceeds 2^20");
    q_ = (std::uint32_t)q;
    size_ = (std::uint32_t)size;

    // Digit table: little-endian base-p digits of the big-endian-weighted
    // index, i.e. digit i of index r is (r / p^{m-1-i}) % p.
    digits_.resize((size_t)size_ * m_);
    for (std::uint32_t r = 0; r < size_; ++r) {
        std::uint32_t x = r;
        for (int i = m_ - 1; i >= 0; --i) {
            digits_[(size_t)r * m_ + i] = (std::uint8_t)(x % p_);
            x /= p_;
        }
    }
}

std::shared_ptr<const FieldTower> FieldTower::make(int p, int e, bool quadratic,
                                                   std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw ValidationError("extension degree e must be positive");
    const int m = quadratic ? 2 * e : e;

    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        if ((int)mod.size() != m + 1) throw ValidationError("modulus must have degree m = " + std::to_string(m));
        if (mod.back() != 1) throw ValidationError("modulus must be monic");
        for (int c : mod)
            if (c < 0 || c >= p) throw ValidationError("modulus coefficients must lie in [0, p)");
        if (!is_irreducible(mod, p)) throw ValidationError("modulus is not irreducible over F_p");
    } else {
        mod = find_modulus(p, m);
    }

    static std::mutex cache_mutex;
    static std::map<std::tuple<int, int, int, std::vector<int>>, std::shared_ptr<const FieldTower>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(p, e, m, mod);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const FieldTower> t(new FieldTower(p, e, quadratic, std::move(mod)));
    cache.emplace(std::move(key), t);
    return t;
}

bool FieldTower::same_tower(const FieldTower& other) const {
    return this == &other || (p_ == other.p_ && e_ == other.e_ && m_ == other.m_ && modulus_ == other.modulus_);
}

FieldElement FieldTower::one() const { return from_int(1); }

FieldElement FieldTower::from_int(long value) const {
    long v = value % p_;
    if (v < 0) v += p_;
    std::vector<int> c(m_, 0);
    c[0] = (int)v;
    return from_coeffs(c);
}

FieldElement FieldTower::from_coeffs(const std::vector<int>& coeffs) const {
    if ((int)coeffs.size() != m_) throw ValidationError("coefficient vector must have length m = " + std::to_string(m_));
    std::uint32_t idx = 0;
    for (int i = 0; i < m_; ++i) {
        int c = coeffs[i];
        if (c < 0 || c >= p_) throw ValidationError("coefficient out of range [0, p)");
        idx = idx * p_ + (std::uint32_t)c;  // c_0 most significant
    }
    return FieldElement(this, idx);
}

FieldElement FieldTower::element_at(std::uint32_t lex_rank) const {
    if (lex_rank >= size_) throw ValidationError("element rank out of range");
    return FieldElement(this, lex_rank);
}

std::vector<FieldElement> FieldTower::all_elements() const {
    std::vector<FieldElement> v;
    v.reserve(size_);
    for (std::uint32_t r = 0; r < size_; ++r) v.emplace_back(this, r);
    return v;
}

std::uint32_t FieldTower::add_idx(std::uint32_t a, std::uint32_t b) const {
    const std::uint8_t* da = &digits_[(size_t)a * m_];
    const std::uint8_t* db = &digits_[(size_t)b * m_];
    std::uint32_t idx = 0;
    for (int i = 0; i < m_; ++i) {
        int s = da[i] + db[i];
        if (s >= p_) s -= p_;
        idx = idx * p_ + (std::uint32_t)s;
    }
    return idx;
}

std::uint32_t FieldTower::sub_idx(std::uint32_t a, std::uint32_t b) const {
    const std::uint8_t* da = &digits_[(size_t)a * m_];
    const std::uint8_t* db = &digits_[(size_t)b * m_];
    std::uint32_t idx = 0;
    for (int i = 0; i < m_; ++i) {
        int s = da[i] - db[i];
        if (s < 0) s += p_;
        idx = idx * p_ + (std::uint32_t)s;
    }
    return idx;
}

std::uint32_t FieldTower::neg_idx(std::uint32_t a) const { return sub_idx(0, a); }

void FieldTower::build_log_tables() const {
    // Slow polynomial product on digit vectors, used only here.
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        IPoly pa(m_), pb(m_);
        for (int i = 0; i < m_; ++i) pa[i] = digits_[(size_t)a * m_ + i], pb[i] = digits_[(size_t)b * m_ + i];
        IPoly r = imod(imul(pa, pb, p_), modulus_, p_);
        r.resize(m_, 0);
        std::uint32_t idx = 0;
        for (int i = 0; i < m_; ++i) idx = idx * p_ + (std::uint32_t)r[i];
        return idx;
    };
    auto slow_pow = [&](std::uint32_t a, long n) -> std::uint32_t {
        std::uint32_t result = from_int(1).index(), base = a;
        while (n > 0) {
            if (n & 1) result = slow_mul(result, base);
            base = slow_mul(base, base);
            n >>= 1;
        }
        return result;
    };

    const long group = (long)size_ - 1;
    const auto factors = factorize(group);
    const std::uint32_t one_idx = from_int(1).index();

    std::uint32_t eps = 0;
    for (std::uint32_t r = 1; r < size_; ++r) {
        bool primitive = true;
        for (const auto& [prime, _] : factors) {
            if (slow_pow(r, group / prime) == one_idx) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            eps = r;
            break;
        }
    }
    primitive_idx_ = eps;

    exp_.assign(group, 0);
    log_.assign(size_, 0);
    std::uint32_t x = one_idx;
    for (long j = 0; j < group; ++j) {
        exp_[j] = x;
        log_[x] = (std::uint32_t)j;
        x = slow_mul(x, eps);
    }
}

FieldElement FieldTower::primitive_element() const {
    std::call_once(log_once_, [this] { build_log_tables(); });
    return FieldElement(this, primitive_idx_);
}

std::uint32_t FieldTower::mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::call_once(log_once_, [this] { build_log_tables(); });
    const long group = (long)size_ - 1;
    long s = (long)log_[a] + (long)log_[b];
    if (s >= group) s -= group;
    return exp_[s];
}

std::uint32_t FieldTower::inv_idx(std::uint32_t a) const {
    if (a == 0) throw ZeroDivisionError("division by zero field element");
    std::call_once(log_once_, [this] { build_log_tables(); });
    const long group = (long)size_ - 1;
    return exp_[(group - (long)log_[a]) % group];
}

std::uint32_t FieldTower::log_idx(std::uint32_t a) const {
    if (a == 0) throw ZeroDivisionError("discrete log of zero");
    std::call_once(log_once_, [this] { build_log_tables(); });
    return log_[a];
}

std::uint32_t FieldTower::pow_idx(std::uint32_t a, long n) const {
    const std::uint32_t one_idx = from_int(1).index();
    if (a == 0) {
        if (n == 0) return one_idx;
        if (n < 0) throw ZeroDivisionError("negative power of zero");
        return 0;
    }
    std::call_once(log_once_, [this] { build_log_tables(); });
    const long group = (long)size_ - 1;
    long ex = ((long)log_[a] % group) * (n % group) % group;
    if (ex < 0) ex += group;
    return exp_[ex];
}

// --- free element operations -------------------------------------------------

FieldElement pow(const FieldElement& x, long n) { return FieldElement(x.tower_ptr(), x.tower().pow_idx(x.index(), n)); }

FieldElement inv(const FieldElement& x) { return FieldElement(x.tower_ptr(), x.tower().inv_idx(x.index())); }

FieldElement conjugate_q(const FieldElement& x) {
    const auto& t = x.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("conjugate_q requires a quadratic tower (m = 2e)");
    return pow(x, (long)t.q());
}

FieldElement norm_q(const FieldElement& x) {
    const auto& t = x.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("norm_q requires a quadratic tower (m = 2e)");
    return pow(x, (long)t.q() + 1);
}

FieldElement trace_q(const FieldElement& x) { return x + conjugate_q(x); }

bool in_subfield(const FieldElement& x) {
    const auto& t = x.tower();
    return pow(x, (long)t.q()) == x;
}

std::vector<FieldElement> solve_norm_equation(const FieldElement& c) {
    const auto& t = c.tower();
    if (!t.has_quadratic_subfield()) throw UsageError("solve_norm_equation requires a quadratic tower");
    if (c.is_zero()) return {t.zero()};
    if (!in_subfield(c)) throw NoSolutionError("norm equation target lies outside F_q; norms land in F_q");
    std::vector<FieldElement> roots = nth_roots(c, (long)t.q() + 1);
    return roots;  // exactly q+1 of them
}

std::vector<FieldElement> nth_roots(const FieldElement& c, long n) {
    const auto& t = c.tower();
    if (n < 1) throw ValidationError("root exponent must be positive");
    if (c.is_zero()) return {t.zero()};
    // Discrete-log solve of n·j ≡ log c (mod size-1).
    const long group = (long)t.size() - 1;
    const long logc = (long)t.log_idx(c.index());
    const long d = std::gcd(n % group == 0 ? group : n % group, group);
    if (logc % d != 0) return {};
    // t0 solves (n/d)·t ≡ (logc/d) (mod group/d)
    const long ng = group / d;
    long a = (n % group) / d % ng, b = (logc / d) % ng;
    // inverse of a mod ng by extended Euclid
    long r0 = a, r1 = ng, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long qt = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - qt * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - qt * s1);
    }
    long ainv = ((s0 % ng) + ng) % ng;
    long t0 = b * ainv % ng;
    FieldElement eps = t.primitive_element();
    std::vector<FieldElement> out;
    out.reserve(d);
    for (long j = 0; j < d; ++j) out.push_back(pow(eps, t0 + j * ng));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t multiplicative_order(const FieldElement& x) {
    if (x.is_zero()) throw UsageError("zero has no multiplicative order");
    const long group = (long)x.tower().size() - 1;
    long ord = group;
    for (long d = 1; d * d <= group; ++d) {
        if (group % d) continue;
        for (long cand : {d, group / d})
            if (cand < ord && pow(x, cand) == x.tower().one()) ord = cand;
    }
    return (std::uint32_t)ord;
}

// --- polynomial helpers -------------------------------------------------------

std::vector<FieldElement> poly_mul(std::span<const FieldElement> a, std::span<const FieldElement> b) {
    if (a.empty() || b.empty()) return {};
    const auto* t = a[0].tower_ptr();
    std::vector<FieldElement> r(a.size() + b.size() - 1, t->zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<FieldElement> poly_from_roots(std::span<const FieldElement> roots) {
    if (roots.empty()) throw ValidationError("poly_from_roots needs at least one root");
    const auto* t = roots[0].tower_ptr();
    std::vector<FieldElement> g = {t->one()};
    for (const auto& r : roots) {
        std::vector<FieldElement> lin = {-r, t->one()};
        g = poly_mul(g, lin);
    }
    return g;
}

FieldElement poly_eval(std::span<const FieldElement> poly, const FieldElement& x) {
    FieldElement acc = x.tower().zero();
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

std::vector<FieldElement> poly_derivative(std::span<const FieldElement> poly) {
    const auto* t = poly.empty() ? nullptr : poly[0].tower_ptr();
    std::vector<FieldElement> d;
    for (size_t i = 1; i < poly.size(); ++i) d.push_back(t->from_int((long)i) * poly[i]);
    return d;
}

}  // namespace tgrs
