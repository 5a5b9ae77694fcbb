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
#ifndef KZN_GEOMETRY_HPP
#define KZN_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kzn/ring.hpp"

namespace kzn {

// A vector of residues mod a shared modulus, coordinate 1 first.
using Vec = std::vector<uint64_t>;

// A projective direction in P(Z/NZ)^{n-1}: the canonical representative of a
// class of vectors, identified up to unit multiples, that have at least one
// unit coordinate modulo every prime power dividing N.
//
// Canonical representative rule: if some coordinate is a unit mod N, the
// first such coordinate is scaled to 1; otherwise the representative is the
// lexicographically least unit multiple.  The rule is a file-format
// commitment: enumeration order and witness keys depend on it.
struct Direction {
    Vec rep;
    uint64_t modulus = 2;

    size_t dim() const { return rep.size(); }
    bool operator==(const Direction&) const = default;
    bool operator<(const Direction& o) const {
        if (modulus != o.modulus) return modulus < o.modulus;
        return rep < o.rep;
    }
};

// The line {a + lambda*u : lambda in Z/NZ}; exactly N distinct points when
// u is projective.
struct Line {
    Vec base;
    Direction dir;

    bool operator==(const Line&) const = default;
};

// True when u has at least one unit coordinate modulo every prime power of f.
bool is_projective(const Vec& u, const Factorization& f);

// Canonical representative of the class of u, or nullopt when u is not
// projective.
std::optional<Direction> canonicalize(const Vec& u, uint64_t modulus);
std::optional<Direction> canonicalize(const Vec& u, const Factorization& f);

// All direction classes, each exactly once, in lexicographic order of the
// canonical representatives.  Composite N is enumerated through CRT products
// of per-prime-power enumerations.
std::vector<Direction> enumerate_projective(uint64_t modulus, uint32_t n);

// |P(Z/NZ)^{n-1}| in closed form:
//   prod_i (p_i^{k_i n} - p_i^{(k_i - 1) n}) / (p_i^{k_i - 1} (p_i - 1)).
Int projective_count(uint64_t modulus, uint32_t n);
Int projective_count(const Factorization& f, uint32_t n);

// a + lambda*u for lambda = 0 .. N-1, in lambda order.
std::vector<Vec> line_points(const Line& line);

// Component lines of L modulo each prime power of f; the CRT product of
// their point sets is the point set of L.
std::vector<Line> line_crt_decompose(const Line& line, const Factorization& f);

} // namespace kzn

#endif
