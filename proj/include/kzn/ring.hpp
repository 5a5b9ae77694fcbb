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
#ifndef KZN_RING_HPP
#define KZN_RING_HPP

#include <cstdint>
#include <vector>

#include "kzn/rat.hpp"

namespace kzn {

struct PrimePower {
    uint64_t p = 0;
    uint32_t k = 0;

    uint64_t value() const; // p^k
    bool operator==(const PrimePower&) const = default;
};

// N together with its ordered prime-power factorization.  Primes strictly
// increasing, each exponent >= 1, product of p_i^{k_i} equal to N.
struct Factorization {
    uint64_t n = 1;
    std::vector<PrimePower> factors;

    bool square_free() const;
    bool operator==(const Factorization&) const = default;
};

// Deterministic trial-division factorization.  Rejects N < 2.
Factorization factorize(uint64_t n);

// A residue in Z/NZ.  Always kept reduced: 0 <= value < modulus.
struct Zmod {
    uint64_t value = 0;
    uint64_t modulus = 1;

    bool operator==(const Zmod&) const = default;
};

Zmod make_zmod(uint64_t value, uint64_t modulus);

bool is_unit(const Zmod& x);
bool is_unit(uint64_t value, uint64_t modulus);

uint64_t gcd_u64(uint64_t a, uint64_t b);
// Inverse of a mod n; requires gcd(a, n) = 1.
uint64_t inv_mod(uint64_t a, uint64_t n);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t n);
uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t n);

// Residues of x modulo each prime power of f; f must factorize x.modulus.
std::vector<Zmod> crt_split(const Zmod& x, const Factorization& f);
// Two-sided inverse of crt_split: rebuilds the residue mod f.n.
Zmod crt_combine(const std::vector<Zmod>& parts, const Factorization& f);

// Base-p digits of x, low to high, exactly `len` of them.  Requires x < p^len.
std::vector<uint32_t> p_digits(uint64_t x, uint64_t p, uint32_t len);
// Horner re-evaluation, the inverse of p_digits.
uint64_t from_p_digits(const std::vector<uint32_t>& digits, uint64_t p);

// Largest t with p^t | x.  Rejects x = 0.
uint32_t p_valuation(uint64_t x, uint64_t p);

// C(a, b) mod p by Lucas's theorem: the product of the digit-wise binomials
// in base p.  Nonzero iff every base-p digit of b is at most the matching
// digit of a.
uint32_t lucas_binom(uint64_t a, uint64_t b, uint64_t p);

// Exact binomial coefficient (0 when b > a).
Int binom_exact(uint64_t a, uint64_t b);

// Generalized binomial with rational upper argument:
//   C(x, n) = prod_{i=1}^{n} (x - n + i) / i.
Rat binom_real(const Rat& x, uint32_t n);

} // namespace kzn

#endif
