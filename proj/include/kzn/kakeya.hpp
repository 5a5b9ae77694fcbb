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
#ifndef KZN_KAKEYA_HPP
#define KZN_KAKEYA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kzn/geometry.hpp"
#include "kzn/rat.hpp"

namespace kzn {

// A deduplicated subset of (Z/NZ)^n, points kept sorted.
struct PointSet {
    uint64_t modulus = 2;
    uint32_t dim = 1;
    std::vector<Vec> points;

    size_t size() const { return points.size(); }
    bool contains(const Vec& p) const;

    // Sorts, validates ranges and rejects duplicates.
    static PointSet make(uint64_t modulus, uint32_t dim, std::vector<Vec> points);
};

// One witnessing line per direction; each line's direction equals its key.
struct KakeyaWitness {
    std::map<Direction, Line> lines;

    void insert(Line line);
};

// Per-direction outcome of a verification run.
struct VerifyReport {
    uint64_t m = 0;
    uint64_t total_directions = 0;
    uint64_t satisfied = 0;
    Rat fraction;                    // satisfied / total, exact
    bool kakeya = false;             // fraction == 1 at m == N
    std::optional<Direction> worst;  // direction with the smallest best richness
    uint64_t worst_richness = 0;
    KakeyaWitness witnesses;         // an m-rich line per satisfied direction
};

uint64_t richness(const PointSet& s, const Line& line);

// For each direction, searches all lines in that direction for an m-rich one
// (or, when a witness map is given, checks only the provided lines).
// Requires 1 <= m <= N.
VerifyReport verify_kakeya(const PointSet& s, uint64_t m,
                           const KakeyaWitness* witnesses = nullptr);

// True when satisfied/total >= eps, decided on exact rationals as
// satisfied >= ceil(eps * total).
bool meets_fraction(const VerifyReport& r, const Rat& eps);

// The digit-weighting sequence c_0..c_{k-1}, k = (p^{s+1}-1)/(p-1), driving
// the small-set construction: c_0 = p^s - 1, and each step either decrements
// the top base-p digit or, when the top digits hold a maximal run of zeros,
// repeats the value once per zero and then borrows: the digit below the run
// is decremented and the run resets to p-1.  After reaching 0 the sequence
// stays 0.
struct CSequence {
    uint32_t p = 3;
    uint32_t s = 1;
    uint64_t k = 0;               // (p^{s+1}-1)/(p-1)
    std::vector<uint64_t> values; // length k, entries < p^s

    uint64_t pk() const; // p^k
};

CSequence build_c_sequence(uint32_t p, uint32_t s);

// g(a_0 + a_1 p + ... + a_{k-1}p^{k-1}) = sum a_j c_j p^j  (mod p^k).
uint64_t g_eval(uint64_t u, const CSequence& c);

enum class GImageMode { Exhaustive, Sampled };

struct GImageReport {
    uint64_t max_image = 0;     // max over t of |{t*u - g(u)}|
    uint64_t argmax_t = 0;
    uint64_t sharp = 0;         // p^{k-s}, the proof's sharper cap
    Int bound_floor;            // floor(p^k / (k (1 - 1/p)))
    bool pass = false;          // max_image <= bound_floor
    bool exhaustive = false;
    uint64_t sampled_t = 0;
};

// Exhaustive mode requires p^k <= 10^4; sampled mode draws t values
// deterministically from the given seed.
GImageReport g_image_check(uint32_t p, uint32_t s, GImageMode mode, uint64_t seed = 1);

// |{t*u - g(u) : u in Z/p^k Z}| for one slice t.
uint64_t g_image_size(const CSequence& c, uint64_t t);

struct Construction {
    PointSet points;
    KakeyaWitness witness;
};

// The slice construction S_n = {(t, t u_2 - g(u_2), ..., t u_n - g(u_n))}
// with witness lines for every direction (1, u_2, ..., u_n).
Construction construct_unit_first(uint32_t p, uint32_t s, uint32_t n);

// Union of the n coordinate-permuted copies of the slice construction,
// placing the free parameter at each coordinate in turn; covers every
// direction class at size <= n * p^{kn - s(n-1)}.  The witness map is
// verified before returning.
Construction construct_kakeya_pk(uint32_t p, uint32_t s, uint32_t n);

// CRT product of per-prime-power constructions for N = prod p_i^{k_i},
// k_i = (p_i^{s_i+1}-1)/(p_i-1).  Primes must be distinct.
Construction construct_kakeya_n(const std::vector<std::pair<uint32_t, uint32_t>>& spec,
                                uint32_t n);

struct MinSearchResult {
    uint64_t size = 0;
    PointSet witness_set;
};

// Exact minimum Kakeya size by exhaustive subset search (grid size N^n <= 20).
// Deterministic: the lexicographically first minimum witness is returned.
MinSearchResult min_kakeya_bruteforce(uint64_t modulus, uint32_t n);

// Greedy cover: per direction, picks the line maximizing overlap with the
// points already chosen.  The direction order is shuffled by `seed`.
Construction greedy_kakeya(uint64_t modulus, uint32_t n, uint64_t seed);

// --- stable file formats (schema "kzn/1") ---

std::string point_set_to_json(const PointSet& s);
// Rejects duplicate points, out-of-range coordinates and shape mismatches.
PointSet point_set_from_json(const std::string& text);

std::string witness_to_json(const KakeyaWitness& w);
KakeyaWitness witness_from_json(const std::string& text, uint64_t modulus, uint32_t dim);

} // namespace kzn

#endif
