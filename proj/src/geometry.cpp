/* Copyright (C) 2026 The kzn authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "kzn/geometry.hpp"

#include <algorithm>
#include <stdexcept>


namespace kzn {

bool is_projective(const Vec& u, const Factorization& f) {
    for (const auto& pp : f.factors) {
        bool unit_seen = false;
        for (uint64_t x : u) {
            if (x % pp.p != 0) {
                unit_seen = true;
                break;
            }
        }
        if (!unit_seen) return false;
    }
    return true;
}

std::optional<Direction> canonicalize(const Vec& u, const Factorization& f) {
    uint64_t n = f.n;
    if (u.empty()) throw std::invalid_argument("canonicalize: empty vector");
    Vec red(u.size());
    for (size_t i = 0; i < u.size(); ++i) red[i] = u[i] % n;
    if (!is_projective(red, f)) return std::nullopt;
    for (size_t i = 0; i < red.size(); ++i) {
        if (is_unit(red[i], n)) {
            uint64_t s = inv_mod(red[i], n);
            Vec rep(red.size());
            for (size_t j = 0; j < red.size(); ++j) rep[j] = mul_mod(s, red[j], n);
            return Direction{std::move(rep), n};
        }
    }
    // no coordinate is a unit mod N: lexicographically least unit multiple
    Vec best;
    for (uint64_t c = 1; c < n; ++c) {
        if (gcd_u64(c, n) != 1) continue;
        Vec cand(red.size());
        for (size_t j = 0; j < red.size(); ++j) cand[j] = mul_mod(c, red[j], n);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return Direction{std::move(best), n};
}

std::optional<Direction> canonicalize(const Vec& u, uint64_t modulus) {
    return canonicalize(u, factorize(modulus));
}

namespace {

// Canonical representatives mod p^k in direct form: the first unit
// coordinate sits at position j with value 1, coordinates before it are
// multiples of p, coordinates after it are arbitrary.
std::vector<Vec> prime_power_reps(uint64_t p, uint32_t k, uint32_t n) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) q *= p;
    uint64_t qp = q / p; // count of non-units
    std::vector<Vec> reps;
    for (uint32_t j = 0; j < n; ++j) {
        // odometer over (non-units)^j x {1} x (all residues)^{n-1-j}
        Vec v(n, 0);
        v[j] = 1;
        while (true) {
            reps.push_back(v);
            size_t pos = n;
            while (pos-- > 0) {
                if (pos == j) continue;
                uint64_t limit = pos < j ? qp : q;
                uint64_t cur = pos < j ? v[pos] / p : v[pos];
                if (cur + 1 < limit) {
                    v[pos] = pos < j ? (cur + 1) * p : cur + 1;
                    break;
                }
                v[pos] = 0;
            }
            if (pos == static_cast<size_t>(-1)) break;
        }
    }
    return reps;
}

} // namespace

std::vector<Direction> enumerate_projective(uint64_t modulus, uint32_t n) {
    if (modulus < 2) throw std::invalid_argument("enumerate_projective: N must be >= 2");
    if (n < 1) throw std::invalid_argument("enumerate_projective: n must be >= 1");
    Factorization f = factorize(modulus);
    std::vector<std::vector<Vec>> parts;
    parts.reserve(f.factors.size());
    for (const auto& pp : f.factors) parts.push_back(prime_power_reps(pp.p, pp.k, n));

    std::vector<Direction> out;
    std::vector<size_t> idx(parts.size(), 0);
    std::vector<Zmod> slots(parts.size());
    while (true) {
        Vec combined(n);
        for (uint32_t c = 0; c < n; ++c) {
            for (size_t i = 0; i < parts.size(); ++i)
                slots[i] = Zmod{parts[i][idx[i]][c], f.factors[i].value()};
            combined[c] = crt_combine(slots, f).value;
        }
        auto dir = canonicalize(combined, f);
        out.push_back(std::move(*dir));
        size_t pos = parts.size();
        while (pos-- > 0) {
            if (++idx[pos] < parts[pos].size()) break;
            idx[pos] = 0;
        }
        if (pos == static_cast<size_t>(-1)) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int projective_count(const Factorization& f, uint32_t n) {
    Int total = 1;
    for (const auto& pp : f.factors) {
        Int p(static_cast<unsigned long>(pp.p));
        Int num = int_pow(p, static_cast<unsigned long>(pp.k) * n) -
                  int_pow(p, static_cast<unsigned long>(pp.k - 1) * n);
        Int den = int_pow(p, pp.k - 1) * (p - 1);
        total *= num / den;
    }
    return total;
}

Int projective_count(uint64_t modulus, uint32_t n) {
    return projective_count(factorize(modulus), n);
}

std::vector<Vec> line_points(const Line& line) {
    uint64_t n = line.dir.modulus;
    size_t dim = line.dir.dim();
    if (line.base.size() != dim)
        throw std::invalid_argument("line_points: base/direction dimension mismatch");
    std::vector<Vec> pts;
    pts.reserve(n);
    for (uint64_t lam = 0; lam < n; ++lam) {
        Vec p(dim);
        for (size_t i = 0; i < dim; ++i)
            p[i] = (line.base[i] % n + mul_mod(lam, line.dir.rep[i], n)) % n;
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<Line> line_crt_decompose(const Line& line, const Factorization& f) {
    if (f.n != line.dir.modulus)
        throw std::invalid_argument("line_crt_decompose: factorization mismatch");
    std::vector<Line> out;
    out.reserve(f.factors.size());
    for (const auto& pp : f.factors) {
        uint64_t q = pp.value();
        Vec base(line.base.size()), dir(line.dir.rep.size());
        for (size_t i = 0; i < base.size(); ++i) {
            base[i] = line.base[i] % q;
            dir[i] = line.dir.rep[i] % q;
        }
        auto canon = canonicalize(dir, factorize(q));
        out.push_back(Line{std::move(base), std::move(*canon)});
    }
    return out;
}

} // namespace kzn
