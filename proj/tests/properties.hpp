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
#ifndef KZN_TESTS_PROPERTIES_HPP
#define KZN_TESTS_PROPERTIES_HPP

// Randomized lemma-level suites shared by the unit tests and the acceptance
// runner.  Each returns the number of failing instances (0 expected).

#include <map>

#include "kzn/hasse.hpp"
#include "kzn/linalg.hpp"
#include "kzn/ring.hpp"
#include "support.hpp"

namespace kzn::test {

inline FpQuotient random_quotient_ring(std::mt19937_64& rng) {
    static const uint32_t primes[] = {2, 3, 5};
    uint32_t p = primes[rng() % 3];
    size_t d = 2 + rng() % 2;
    if (rng() % 2 == 0) return FpQuotient::make_cyclic(p, d);
    Fp f{p};
    FpPoly m;
    m.c.assign(d + 1, 0);
    for (size_t i = 0; i < d; ++i) m.c[i] = static_cast<uint32_t>(rng() % p);
    m.c[d] = 1;
    return FpQuotient::make(f, std::move(m));
}

// crank{A_i} >= crank{H_i A_i}
inline size_t suite_crank_mat_mult(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        FpQuotient ring = random_quotient_ring(rng);
        size_t nf = 1 + rng() % 3;
        size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
        std::vector<Matrix<FpQuotient>> family, multiplied;
        for (size_t i = 0; i < nf; ++i) {
            family.push_back(random_quot_matrix(rng, ring, a, b));
            auto h = random_quot_matrix(rng, ring, c, a);
            multiplied.push_back(multiply(h, family.back()));
        }
        if (crank(family) < crank(multiplied)) ++failures;
    }
    return failures;
}

// (A1 (x) A2)(B1 (x) B2) = (A1 B1) (x) (A2 B2), field case and mixed case
inline size_t suite_kron_mult(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    static const uint32_t primes[] = {2, 3, 5};
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        uint32_t p = primes[rng() % 3];
        Fp f{p};
        size_t a1 = 1 + rng() % 3, n1 = 1 + rng() % 3, b1 = 1 + rng() % 3;
        size_t a2 = 1 + rng() % 3, n2 = 1 + rng() % 3, b2 = 1 + rng() % 3;
        if (it % 2 == 0) {
            auto m_a1 = random_fp_matrix(rng, f, a1, n1);
            auto m_a2 = random_fp_matrix(rng, f, a2, n2);
            auto m_b1 = random_fp_matrix(rng, f, n1, b1);
            auto m_b2 = random_fp_matrix(rng, f, n2, b2);
            auto lhs = multiply(kron(m_a1, m_a2), kron(m_b1, m_b2));
            auto rhs = kron(multiply(m_a1, m_b1), multiply(m_a2, m_b2));
            if (!(lhs == rhs)) ++failures;
        } else {
            FpQuotient ring = FpQuotient::make_cyclic(p, 2 + rng() % 2);
            auto m_a1 = random_quot_matrix(rng, ring, a1, n1);
            auto m_a2 = random_fp_matrix(rng, ring.field, a2, n2);
            auto m_b1 = random_quot_matrix(rng, ring, n1, b1);
            auto m_b2 = random_fp_matrix(rng, ring.field, n2, b2);
            auto lhs = multiply(kron(m_a1, m_a2), kron(m_b1, m_b2));
            auto rhs = kron(multiply(m_a1, m_b1), multiply(m_a2, m_b2));
            if (!(lhs == rhs)) ++failures;
        }
    }
    return failures;
}

// crank{A_i (x) B_{i,j}} >= r1 r2 with A_i over F_p[z]/<f>, B_{i,j} over F_p
inline size_t suite_crank_tensor(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        FpQuotient ring = random_quotient_ring(rng);
        size_t nf = 1 + rng() % 2, mf = 1 + rng() % 2;
        size_t a1 = 1 + rng() % 2, a2 = 1 + rng() % 3;
        size_t b1 = 1 + rng() % 2, b2 = 1 + rng() % 3;
        std::vector<Matrix<FpQuotient>> big_a;
        for (size_t i = 0; i < nf; ++i) big_a.push_back(random_quot_matrix(rng, ring, a1, a2));
        size_t r1 = crank(big_a);
        size_t r2 = SIZE_MAX;
        std::vector<std::vector<Matrix<Fp>>> big_b(nf);
        for (size_t i = 0; i < nf; ++i) {
            for (size_t j = 0; j < mf; ++j)
                big_b[i].push_back(random_fp_matrix(rng, ring.field, b1, b2));
            r2 = std::min(r2, crank(big_b[i]));
        }
        std::vector<Matrix<FpQuotient>> tensored;
        for (size_t i = 0; i < nf; ++i)
            for (size_t j = 0; j < mf; ++j) tensored.push_back(kron(big_a[i], big_b[i][j]));
        if (crank(tensored) < r1 * r2) ++failures;
    }
    return failures;
}

// a column combination vanishes over the ring iff it vanishes on Coeff(A)
inline size_t suite_coeff_equivalence(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        FpQuotient ring = random_quotient_ring(rng);
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        auto a = random_quot_matrix(rng, ring, rows, cols);
        auto coeff = coeff_matrix(a);
        std::vector<uint32_t> w(cols);
        for (auto& x : w) x = static_cast<uint32_t>(rng() % ring.field.p);
        bool ring_zero = true;
        for (size_t r = 0; r < rows && ring_zero; ++r) {
            FpPoly acc = ring.zero();
            for (size_t c = 0; c < cols; ++c) {
                FpPoly scaled = a.at(r, c);
                for (auto& x : scaled.c) x = ring.field.mul(x, w[c]);
                acc = ring.add(acc, scaled);
            }
            ring_zero = ring.is_zero(acc);
        }
        bool coeff_zero = true;
        for (size_t r = 0; r < coeff.rows() && coeff_zero; ++r) {
            uint32_t acc = 0;
            for (size_t c = 0; c < cols; ++c)
                acc = ring.field.add(acc, ring.field.mul(coeff.at(r, c), w[c]));
            coeff_zero = (acc == 0);
        }
        if (ring_zero != coeff_zero) ++failures;
        if (matrix_rank(coeff) != rank_fp_quot(a)) ++failures;
    }
    return failures;
}

// rank_{Q(zeta)} A >= rank_{F_p} psi(A) on random T_ell^k matrices
inline size_t suite_psi_rank_drop(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    struct Params {
        uint32_t p, k, ell;
    };
    static const Params table[] = {{2, 2, 1}, {2, 2, 2}, {3, 1, 1}};
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        const Params& prm = table[rng() % 3];
        CycloField field{prm.p, prm.k};
        uint64_t d = 1;
        for (uint32_t i = 0; i < prm.ell; ++i) d *= prm.p;
        CycloQuotient ring = CycloQuotient::make_cyclic(field, d);
        size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        Matrix<CycloQuotient> a(ring, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                ZetaPoly e = ring.zero();
                for (auto& x : e.c) x = random_cyclo(rng, field, /*integral=*/true);
                a.at(r, c) = std::move(e);
            }
        auto pair = quotient_rank_pair(a);
        if (pair.rank_qzeta < pair.rank_fp) ++failures;
    }
    return failures;
}

// univariate: all Hasse derivatives at y of weight < w vanish iff
// (x - y)^w divides f
inline size_t suite_hasse_divisibility(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    CycloField rationals{2, 1};
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        uint32_t w = 1 + rng() % 3;
        CycloNumber y = rationals.from_rat(random_rat(rng, 4, 3));
        UniPoly f;
        if (it % 2 == 0) {
            // planted divisible case: (x - y)^w * g
            UniPoly factor{rationals.neg(y), rationals.one()};
            f = UniPoly{rationals.one()};
            for (uint32_t i = 0; i < w; ++i) f = uni_mul(rationals, f, factor);
            UniPoly g(1 + rng() % 5, rationals.zero());
            for (auto& c : g) c = rationals.from_rat(random_rat(rng));
            f = uni_mul(rationals, f, g);
        } else {
            f.assign(1 + rng() % 8, rationals.zero());
            for (auto& c : f) c = rationals.from_rat(random_rat(rng));
        }
        f = uni_trim(rationals, f);
        if (f.empty()) continue; // zero polynomial is divisible and all-vanishing
        MultiPoly fm = MultiPoly::zero(rationals, 1);
        for (size_t i = 0; i < f.size(); ++i)
            fm.add_term({static_cast<uint32_t>(i)}, f[i]);
        bool all_vanish = true;
        for (uint32_t j = 0; j < w && all_vanish; ++j) {
            auto deriv = hasse_derivative(fm, {j});
            all_vanish = rationals.is_zero(mp_eval(deriv, {y}));
        }
        UniPoly factor{rationals.neg(y), rationals.one()};
        UniPoly power{rationals.one()};
        for (uint32_t i = 0; i < w; ++i) power = uni_mul(rationals, power, factor);
        bool divisible = uni_rem(rationals, f, power).empty();
        if (all_vanish != divisible) ++failures;
    }
    return failures;
}

// (f o C)^{(w)}(gamma) = sum b_{w,alpha} f^{(alpha)}(gamma^{u}) for C = y^u
inline size_t suite_composition(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        CycloField field = (it % 2 == 0) ? CycloField{2, 2} : CycloField{3, 1};
        uint32_t n = 1 + rng() % 2;
        std::vector<uint64_t> u(n);
        for (auto& x : u) x = rng() % 7;
        CycloNumber gamma = random_cyclo(rng, field, /*integral=*/true);
        MultiPoly f = MultiPoly::zero(field, n);
        size_t nterms = 1 + rng() % 4;
        for (size_t t = 0; t < nterms; ++t) {
            std::vector<uint32_t> v(n);
            for (auto& e : v) e = rng() % 5;
            f.add_term(v, random_cyclo(rng, field, /*integral=*/true));
        }
        uint32_t w = rng() % 4;
        // h = f(y^u), univariate through exponent substitution
        MultiPoly h = MultiPoly::zero(field, 1);
        for (const auto& [v, coef] : f.terms) {
            uint64_t e = 0;
            for (uint32_t i = 0; i < n; ++i) e += static_cast<uint64_t>(v[i]) * u[i];
            h.add_term({static_cast<uint32_t>(e)}, coef);
        }
        CycloNumber lhs = mp_eval(hasse_derivative(h, {w}), {gamma});
        std::vector<CycloNumber> point(n, field.one());
        for (uint32_t i = 0; i < n; ++i)
            for (uint64_t rep = 0; rep < u[i]; ++rep) point[i] = field.mul(point[i], gamma);
        CycloNumber rhs = field.zero();
        for (const auto& [alpha, b] : composition_coeffs(u, w, gamma)) {
            if (field.is_zero(b)) continue;
            rhs = field.add(rhs, field.mul(b, mp_eval(hasse_derivative(f, alpha), point)));
        }
        if (!(lhs == rhs)) ++failures;
    }
    return failures;
}

// sum_{i,j} t_{i,j} f^{(j)}(a_i) = f mod h for random f of degree < deg h
inline size_t suite_hermite_roundtrip(size_t instances, uint64_t seed) {
    auto rng = make_rng(seed);
    size_t failures = 0;
    for (size_t it = 0; it < instances; ++it) {
        CycloField field = (it % 2 == 0) ? CycloField{2, 2} : CycloField{3, 1};
        size_t nnodes = 1 + rng() % 3;
        std::vector<std::pair<CycloNumber, uint32_t>> nodes;
        uint64_t total = 0;
        for (size_t i = 0; i < nnodes; ++i) {
            CycloNumber a = random_cyclo(rng, field, /*integral=*/true);
            bool dup = false;
            for (const auto& [b, m] : nodes)
                if (a == b) dup = true;
            if (dup) {
                --i;
                continue;
            }
            uint32_t mult = 1 + rng() % 2;
            nodes.emplace_back(a, mult);
            total += mult;
        }
        auto sys = hermite_coeffs(field, nodes);
        UniPoly f(total, field.zero());
        for (auto& c : f) c = random_cyclo(rng, field, /*integral=*/true);
        ZetaPoly acc = sys.ring.zero();
        for (size_t i = 0; i < nodes.size(); ++i) {
            for (uint32_t j = 0; j < nodes[i].second; ++j) {
                // f^{(j)}(a_i) = sum_m C(m, j) f_m a_i^{m-j}
                CycloNumber val = field.zero();
                for (size_t m = j; m < f.size(); ++m) {
                    CycloNumber pw = field.one();
                    for (size_t e = 0; e < m - j; ++e) pw = field.mul(pw, nodes[i].first);
                    val = field.add(val,
                                    field.mul_rat(field.mul(f[m], pw), Rat(binom_exact(m, j))));
                }
                acc = sys.ring.add(acc,
                                   sys.ring.mul_scalar(sys.t.at({i, j}), val));
            }
        }
        ZetaPoly expect = sys.ring.zero();
        for (size_t m = 0; m < f.size(); ++m) expect.c[m] = f[m];
        if (!(acc == expect)) ++failures;
    }
    return failures;
}

} // namespace kzn::test

#endif
