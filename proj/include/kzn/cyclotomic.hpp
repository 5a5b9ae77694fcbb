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
#ifndef KZN_CYCLOTOMIC_HPP
#define KZN_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kzn/fp.hpp"
#include "kzn/rat.hpp"

namespace kzn {

// Coefficients of the p^k-th cyclotomic polynomial
//   Phi_{p^k}(x) = sum_{i=0}^{p-1} x^{i p^{k-1}},
// degree phi(p^k) = p^{k-1}(p-1).
std::vector<Int> cyclotomic_poly(uint32_t p, uint32_t k);

uint32_t euler_phi_pk(uint32_t p, uint32_t k);

// An element of Q(zeta_{p^k}) = Q[x]/<Phi_{p^k}(x)>, stored as the canonical
// reduced representation sum c_i zeta^i with exactly phi(p^k) rational
// coefficients.  Two equal field elements have identical coefficient vectors,
// so equality is structural.
struct CycloNumber {
    uint32_t p = 2;
    uint32_t k = 1;
    std::vector<Rat> c; // length phi(p^k)

    bool operator==(const CycloNumber&) const = default;
};

std::string cyclo_str(const CycloNumber& a);

// Field context for Q(zeta_{p^k}); the ring tag used by matrices.
struct CycloField {
    uint32_t p = 2;
    uint32_t k = 1;

    using Elem = CycloNumber;

    uint32_t phi() const { return euler_phi_pk(p, k); }
    uint64_t pk() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(int64_t v) const;
    Elem from_rat(const Rat& v) const;
    // zeta^{e mod p^k}, reduced mod Phi_{p^k}.
    Elem zeta_pow(int64_t e) const;
    // Reduces an arbitrary power-basis coefficient vector (any length).
    Elem reduce(const std::vector<Rat>& raw) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_rat(const Elem& a, const Rat& r) const;
    // Field inverse; rejects zero.
    Elem inv(const Elem& a) const;
    bool is_zero(const Elem& a) const;

    bool operator==(const CycloField&) const = default;
};

// The quotient map psi_{p^k}: Z(zeta) -> F_p extended to p-integral rationals:
// zeta goes to 1, integers reduce mod p, and the cleared common denominator
// must be coprime to p (otherwise NotPIntegral is raised).
uint32_t psi_number(const CycloNumber& x);

// A polynomial in z with coefficients in Q(zeta_{p^k}); c[i] is the z^i
// coefficient.  Ring-bound values (length = quotient degree) live in
// CycloQuotient; free values are plain dense polynomials.
struct ZetaPoly {
    std::vector<CycloNumber> c;

    bool operator==(const ZetaPoly&) const = default;
};

// Q(zeta)[z]/<h(z)> for monic nonconstant h, covering both the rings
// T_ell^k (h = z^{p^ell} - 1) and the Hermite interpolation modulus
// h = prod (z - zeta^lambda)^{pi(lambda)}.
struct CycloQuotient {
    CycloField base;
    std::vector<CycloNumber> modulus; // monic, length degree+1
    bool cyclic = false;              // true when h = z^d - 1

    using Elem = ZetaPoly;

    static CycloQuotient make(CycloField base, std::vector<CycloNumber> modulus);
    static CycloQuotient make_cyclic(CycloField base, uint64_t d);

    size_t degree() const { return modulus.size() - 1; }

    Elem zero() const;
    Elem one() const;
    Elem monomial(uint64_t e) const;
    Elem scalar(const CycloNumber& v) const;
    Elem reduce(const std::vector<CycloNumber>& raw) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, const CycloNumber& v) const;
    bool is_zero(const Elem& a) const;

    bool operator==(const CycloQuotient&) const = default;
};

// Coefficient-wise psi of a z-polynomial; entry i of the result is
// psi(f.c[i]).  NotPIntegral propagates from any coefficient.
FpPoly psi_poly(const ZetaPoly& f);

// psi landing in T-bar_ell = F_p[z]/<z^d - 1>: coefficient-wise psi with
// exponents folded mod d.
FpPoly psi_to_tbar(const ZetaPoly& f, uint64_t d);

} // namespace kzn

#endif
