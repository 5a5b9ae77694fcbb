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
#ifndef KZN_INCIDENCE_HPP
#define KZN_INCIDENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kzn/kakeya.hpp"
#include "kzn/linalg.hpp"

namespace kzn {

// The incidence matrix M_{p^ell,n} over T-bar_ell: rows and columns indexed
// by (Z/p^ell Z)^n in lexicographic order with coordinate 1 most significant,
// entry (u, v) = z^{<u,v> mod p^ell}.
struct MMatrix {
    uint32_t p = 2;
    uint32_t ell = 1;
    uint32_t n = 1;
    uint64_t q = 2; // p^ell
    Matrix<FpQuotient> mat;
};

// Index of a vector under the fixed row/column order.
uint64_t vec_to_index(const Vec& v, uint64_t q);
Vec index_to_vec(uint64_t idx, uint64_t q, uint32_t n);

// Requires p^{ell n} <= 10^4 rows.
MMatrix build_m(uint32_t p, uint32_t ell, uint32_t n);

// Row restriction; the column count is preserved.
Matrix<FpQuotient> restrict_m(const MMatrix& m, const std::vector<uint64_t>& row_indices);
Matrix<FpQuotient> restrict_m_vectors(const MMatrix& m, const std::vector<Vec>& rows);

// The w-adic valuation of the diagonal entry D(j,j) = prod_{i<j}(z^j - z^i)
// after substituting z = 1 + w:  sum_{l=1}^{j} p^{v_p(l)}.
uint64_t diag_valuation(uint64_t j, uint64_t p);

// The per-j relaxation j*(ell - (ell-1)/p), reported alongside the exact
// valuation; it can overshoot where the exact criterion does not.
Rat diag_valuation_relaxed(uint64_t j, uint64_t p, uint32_t ell);

// Certified lower bound on rank_{F_p} M_{p^ell,n}: the number of tuples
// (j_1..j_n) in [0, p^ell)^n with sum_i diag_valuation(j_i) <= p^ell - 1.
// Requires p^ell <= 10^4.
Int diag_rank_bound(uint32_t p, uint32_t ell, uint32_t n);

// ceil(C(p^ell/ell + n, n)) in exact rational arithmetic.
Int binom_rank_bound(uint32_t p, uint32_t ell, uint32_t n);

// Checks rank M_{p^ell,n}(P(Z/p^ell Z)^{n-1}) = rank M_{p^ell,n} by two
// eliminations.  Requires p^{ell n} <= 10^3.
bool verify_restricted_rank(uint32_t p, uint32_t ell, uint32_t n);

// D' = {u in (Z/p^ell Z)^n : u mod p^k in D}, lifting the representative
// vectors; each base direction contributes p^{(ell-k)n} lifts.
struct LiftedDirectionSet {
    uint64_t p = 2;
    uint32_t k = 1;
    uint32_t ell = 1;
    std::vector<Direction> base;
    std::vector<Vec> lifted;
};

LiftedDirectionSet lift_directions(const std::vector<Direction>& d, uint32_t ell);

Int gl_order(uint64_t p, uint32_t k, uint32_t n);

struct RotationSearch {
    std::vector<uint64_t> w; // n x n, row-major, mod p^k
    size_t rank = 0;
    bool exhaustive = false;
    uint64_t candidates = 0;
};

// Searches W in GL_n(Z/p^k Z) maximizing rank_{F_p} M_{p^ell,n}(lift of W*D).
// Exhaustive (in lexicographic W order, ties to the least W) when |GL| <=
// budget, else `budget` seeded rejection samples.
RotationSearch best_rotation_rank(uint32_t p, uint32_t k, uint32_t ell, uint32_t n,
                                  const std::vector<Direction>& d, uint64_t budget,
                                  uint64_t seed = 1);

struct RichLineReport {
    Int lhs;          // |S| * C(b + n - 1, n), b = ceil(p^ell / m)
    size_t rhs = 0;   // rank_{F_p} M_{p^ell,n}(D')
    uint64_t b = 0;
    bool pass = false;
    std::vector<std::string> violations; // directions whose witness is not m-rich
};

// The rich-line rank inequality for a point set mod p^k with witness lines:
// directions whose witness fails m-richness are excluded and reported.
// Requires p^ell >= m and p^{ell n} <= 10^3.
RichLineReport rich_line_rank_inequality(const PointSet& s, uint64_t m, uint32_t ell,
                                         const KakeyaWitness& witnesses);

} // namespace kzn

#endif
