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
#ifndef KZN_HASSE_HPP
#define KZN_HASSE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "kzn/cyclotomic.hpp"
#include "kzn/geometry.hpp"

namespace kzn {

// Sparse multivariate polynomial with coefficients in Q(zeta_{p^k}); the
// plain rationals are the case p^k = 2.  No zero coefficients are stored;
// exponent vectors are the map keys in lexicographic order.
struct MultiPoly {
    CycloField field;
    uint32_t nvars = 1;
    std::map<std::vector<uint32_t>, CycloNumber> terms;

    static MultiPoly zero(CycloField field, uint32_t nvars);
    static MultiPoly monomial(CycloField field, std::vector<uint32_t> exps, CycloNumber coef);
    // Accumulates a term; zero results are dropped.
    void add_term(const std::vector<uint32_t>& exps, const CycloNumber& coef);
};

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_scale(const MultiPoly& a, const CycloNumber& s);
CycloNumber mp_eval(const MultiPoly& f, const std::vector<CycloNumber>& y);

uint32_t weight(const std::vector<uint32_t>& alpha);

// The alpha-th Hasse derivative: the z^alpha coefficient of f(x + z).
// Termwise prod_i C(v_i, alpha_i) x^{v - alpha}; terms with v_i < alpha_i
// drop out.
MultiPoly hasse_derivative(const MultiPoly& f, const std::vector<uint32_t>& alpha);

// Row vector of the alpha-th Hasse derivatives of all monomials with
// exponents below d per variable, evaluated at y.  Columns follow the
// lexicographic monomial order with variable 1 most significant (matching
// the incidence-matrix column order).
std::vector<CycloNumber> eval_vector(uint32_t d, uint32_t n, const std::vector<uint32_t>& alpha,
                                     const std::vector<CycloNumber>& y, const CycloField& field);

// Composition coefficients for C(y) = y^{u}: b_{w,alpha} is the eps^w
// coefficient of prod_i ((gamma+eps)^{u_i} - gamma^{u_i})^{alpha_i}, so that
// (f o C)^{(w)}(gamma) = sum_{wt(alpha)<=w} b_{w,alpha} f^{(alpha)}(gamma^u).
// All alpha with wt(alpha) <= w appear in the result, zeros included.
std::map<std::vector<uint32_t>, CycloNumber> composition_coeffs(const std::vector<uint64_t>& u,
                                                                uint32_t w,
                                                                const CycloNumber& gamma);

// Hermite interpolation through confluent nodes (a_i, m_i): coefficients
// t_{i,j} in F[z]/<h>, h = prod (z - a_i)^{m_i}, with
// sum_{i,j} t_{i,j} f^{(j)}(a_i) = f(z) mod h for every polynomial f.
struct HermiteSystem {
    CycloQuotient ring; // Q(zeta)[z]/<h>
    std::vector<std::pair<CycloNumber, uint32_t>> nodes;
    std::map<std::pair<size_t, uint32_t>, ZetaPoly> t; // (node index, derivative order)
};

HermiteSystem hermite_coeffs(const CycloField& field,
                             const std::vector<std::pair<CycloNumber, uint32_t>>& nodes);

// Nonnegative weights on the points of a line.
struct WeightFunction {
    std::map<Vec, uint32_t> weights;

    static WeightFunction uniform(const Line& line, uint32_t value);
    static WeightFunction concentrated(const Line& line, const Vec& point, uint32_t total);
    uint64_t total() const;
};

// The decoding coefficients c_{lambda,alpha} in Q(zeta)[z]/<h> with
//   psi( sum c_{lambda,alpha} f^{(alpha)}(zeta^{a+lambda u}) ) = f(z^{u'})
// for every integer polynomial f.  Only pairs with wt(alpha) <
// pi(a + lambda u) appear.
struct DecodeCoefficients {
    uint32_t p = 2;
    uint32_t k = 1;
    uint32_t ell = 1;
    Line line;
    Vec lift; // u' mod p^ell
    std::vector<uint32_t> pi_by_lambda; // after trimming to sum = p^ell
    CycloQuotient ring;
    std::map<std::pair<uint64_t, std::vector<uint32_t>>, ZetaPoly> c;
};

// Requires u' mod p^k = L's direction and sum(pi) >= p^ell; excess weight is
// trimmed from the largest lambda downward.
DecodeCoefficients decode_coeffs(const Line& line, const Vec& lift, uint32_t ell,
                                 const WeightFunction& pi);

struct DecodeReport {
    bool pass = false;
    struct Item {
        std::vector<uint32_t> v;
        FpPoly decoded; // psi of the combined sum, in T-bar_ell
        FpPoly expected; // z^{<v,u'> mod p^ell}
        bool ok = false;
    };
    std::vector<Item> items;
};

// Checks, for each monomial exponent v, that the decode combination of the
// Hasse evaluations on the line reproduces z^{<v,u'>} in T-bar_ell exactly.
DecodeReport verify_decode(const Line& line, const Vec& lift, uint32_t ell,
                           const WeightFunction& pi,
                           const std::vector<std::vector<uint32_t>>& exponents);

} // namespace kzn

#endif
