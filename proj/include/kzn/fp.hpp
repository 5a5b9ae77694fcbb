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
#ifndef KZN_FP_HPP
#define KZN_FP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kzn {

// The prime field F_p with machine residues, p < 2^31.
struct Fp {
    uint32_t p = 2;

    using Elem = uint32_t;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return static_cast<Elem>(s >= p ? s - p : s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p);
    }
    Elem inv(Elem a) const;
    bool is_zero(Elem a) const { return a == 0; }

    bool operator==(const Fp&) const = default;
};

// Dense polynomial over F_p; c[i] is the coefficient of z^i.  Plain values
// carry no ring; reduction is explicit or handled by FpQuotient.
struct FpPoly {
    std::vector<uint32_t> c;

    bool operator==(const FpPoly&) const = default;
};

// Degree of the trimmed polynomial; -1 for the zero polynomial.
int fp_poly_degree(const FpPoly& a);
FpPoly fp_poly_trim(FpPoly a);
bool fp_poly_is_zero(const FpPoly& a);
FpPoly fp_poly_add(const Fp& f, const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_sub(const Fp& f, const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_mul(const Fp& f, const FpPoly& a, const FpPoly& b);
// Division with remainder by a monic divisor.
std::pair<FpPoly, FpPoly> fp_poly_divrem(const Fp& f, const FpPoly& a, const FpPoly& b);
// Substitutes z = 1 + w; used for w-adic valuations in F_p[w]/<w^d>.
FpPoly fp_poly_shift_one(const Fp& f, const FpPoly& a);
std::string fp_poly_str(const FpPoly& a);

// The quotient ring F_p[z]/<f(z)> for monic nonconstant f.  Elements are
// coefficient vectors of fixed length deg f.  The rings T-bar_ell are the
// cyclic case f = z^{p^ell} - 1, which reduces by exponent folding.
struct FpQuotient {
    Fp field;
    FpPoly modulus; // monic, degree >= 1
    bool cyclic = false;

    using Elem = FpPoly;

    static FpQuotient make(Fp field, FpPoly modulus);
    // T-bar style ring F_p[z]/<z^d - 1>.
    static FpQuotient make_cyclic(uint32_t p, uint64_t d);

    size_t degree() const { return modulus.c.size() - 1; }

    Elem zero() const { return FpPoly{std::vector<uint32_t>(degree(), 0)}; }
    Elem one() const;
    Elem monomial(uint64_t e) const; // z^{e mod d} for cyclic; else e < degree required
    Elem from_int(int64_t v) const;
    Elem reduce(const FpPoly& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;

    bool operator==(const FpQuotient&) const = default;
};

} // namespace kzn

#endif
