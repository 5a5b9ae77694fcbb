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
#ifndef KZN_TESTS_SUPPORT_HPP
#define KZN_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "kzn/cyclotomic.hpp"
#include "kzn/linalg.hpp"

namespace kzn::test {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix<Fp> random_fp_matrix(std::mt19937_64& rng, Fp f, size_t rows, size_t cols) {
    Matrix<Fp> m(f, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<uint32_t>(rng() % f.p);
    return m;
}

inline Matrix<FpQuotient> random_quot_matrix(std::mt19937_64& rng, const FpQuotient& ring,
                                             size_t rows, size_t cols) {
    Matrix<FpQuotient> m(ring, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            FpPoly e = ring.zero();
            for (auto& x : e.c) x = static_cast<uint32_t>(rng() % ring.field.p);
            m.at(r, c) = std::move(e);
        }
    return m;
}

inline Matrix<Fp> random_invertible_fp(std::mt19937_64& rng, Fp f, size_t n) {
    while (true) {
        auto m = random_fp_matrix(rng, f, n, n);
        if (matrix_rank(m) == n) return m;
    }
}

// small random rationals with denominators coprime-ish to nothing specific
inline Rat random_rat(std::mt19937_64& rng, int64_t num_range = 9, uint64_t den_range = 4) {
    int64_t num = static_cast<int64_t>(rng() % (2 * num_range + 1)) - num_range;
    uint64_t den = 1 + rng() % den_range;
    Rat r(Int(static_cast<long>(num)), Int(static_cast<unsigned long>(den)));
    r.canonicalize();
    return r;
}

inline CycloNumber random_cyclo(std::mt19937_64& rng, const CycloField& f,
                                bool integral = false) {
    CycloNumber x = f.zero();
    for (auto& c : x.c) {
        if (integral)
            c = Rat(Int(static_cast<long>(static_cast<int64_t>(rng() % 11) - 5)));
        else
            c = random_rat(rng);
    }
    return x;
}

inline CycloNumber random_cyclo_nonzero(std::mt19937_64& rng, const CycloField& f,
                                        bool integral = false) {
    while (true) {
        CycloNumber x = random_cyclo(rng, f, integral);
        if (!f.is_zero(x)) return x;
    }
}

// dense univariate polynomial helpers over Q(zeta), used as test oracles

using UniPoly = std::vector<CycloNumber>; // c[i] = coefficient of x^i

inline UniPoly uni_trim(const CycloField& f, UniPoly a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
    return a;
}

inline UniPoly uni_mul(const CycloField& f, const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, f.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    return uni_trim(f, out);
}

// remainder of a by monic b
inline UniPoly uni_rem(const CycloField& f, UniPoly a, const UniPoly& b) {
    a = uni_trim(f, a);
    while (a.size() >= b.size()) {
        CycloNumber lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
        a = uni_trim(f, a);
    }
    return a;
}

} // namespace kzn::test

#endif
