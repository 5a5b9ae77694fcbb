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
#include "kzn/linalg.hpp"

namespace kzn {

Matrix<FpQuotient> kron(const Matrix<FpQuotient>& a, const Matrix<Fp>& b) {
    if (!(a.ring().field == b.ring()))
        throw std::invalid_argument("kron: base field mismatch");
    const FpQuotient& ring = a.ring();
    Matrix<FpQuotient> out(ring, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t r1 = 0; r1 < a.rows(); ++r1)
        for (size_t r2 = 0; r2 < b.rows(); ++r2)
            for (size_t c1 = 0; c1 < a.cols(); ++c1)
                for (size_t c2 = 0; c2 < b.cols(); ++c2) {
                    FpPoly e = a.at(r1, c1);
                    uint32_t s = b.at(r2, c2);
                    for (auto& x : e.c) x = ring.field.mul(x, s);
                    out.at(r1 * b.rows() + r2, c1 * b.cols() + c2) = std::move(e);
                }
    return out;
}

Matrix<FpQuotient> kron(const Matrix<Fp>& a, const Matrix<FpQuotient>& b) {
    if (!(a.ring() == b.ring().field))
        throw std::invalid_argument("kron: base field mismatch");
    const FpQuotient& ring = b.ring();
    Matrix<FpQuotient> out(ring, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t r1 = 0; r1 < a.rows(); ++r1)
        for (size_t r2 = 0; r2 < b.rows(); ++r2)
            for (size_t c1 = 0; c1 < a.cols(); ++c1)
                for (size_t c2 = 0; c2 < b.cols(); ++c2) {
                    FpPoly e = b.at(r2, c2);
                    uint32_t s = a.at(r1, c1);
                    for (auto& x : e.c) x = ring.field.mul(x, s);
                    out.at(r1 * b.rows() + r2, c1 * b.cols() + c2) = std::move(e);
                }
    return out;
}

Matrix<Fp> coeff_matrix(const Matrix<FpQuotient>& a) {
    const FpQuotient& ring = a.ring();
    size_t d = ring.degree();
    Matrix<Fp> out(ring.field, d * a.rows(), a.cols());
    for (size_t i = 0; i < d; ++i)
        for (size_t r = 0; r < a.rows(); ++r)
            for (size_t c = 0; c < a.cols(); ++c)
                out.at(i * a.rows() + r, c) = a.at(r, c).c[i];
    return out;
}

Matrix<CycloField> coeff_matrix(const Matrix<CycloQuotient>& a) {
    const CycloQuotient& ring = a.ring();
    size_t d = ring.degree();
    Matrix<CycloField> out(ring.base, d * a.rows(), a.cols());
    for (size_t i = 0; i < d; ++i)
        for (size_t r = 0; r < a.rows(); ++r)
            for (size_t c = 0; c < a.cols(); ++c)
                out.at(i * a.rows() + r, c) = a.at(r, c).c[i];
    return out;
}

size_t rank_fp_quot(const Matrix<FpQuotient>& a) { return matrix_rank(coeff_matrix(a)); }

size_t rank_cyclo_quot(const Matrix<CycloQuotient>& a) { return matrix_rank(coeff_matrix(a)); }

size_t crank(const std::vector<Matrix<Fp>>& family) { return matrix_rank(vstack(family)); }

size_t crank(const std::vector<Matrix<FpQuotient>>& family) {
    return matrix_rank(coeff_matrix(vstack(family)));
}

size_t crank(const std::vector<Matrix<CycloField>>& family) { return matrix_rank(vstack(family)); }

size_t crank(const std::vector<Matrix<CycloQuotient>>& family) {
    return matrix_rank(coeff_matrix(vstack(family)));
}

Matrix<FpQuotient> psi_matrix(const Matrix<CycloQuotient>& a) {
    const CycloQuotient& ring = a.ring();
    if (!ring.cyclic)
        throw std::invalid_argument("psi_matrix: expected a cyclic modulus z^d - 1");
    FpQuotient target = FpQuotient::make_cyclic(ring.base.p, ring.degree());
    Matrix<FpQuotient> out(target, a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c)
            out.at(r, c) = psi_to_tbar(a.at(r, c), ring.degree());
    return out;
}

QuotientRankPair quotient_rank_pair(const Matrix<CycloQuotient>& a) {
    QuotientRankPair out;
    out.rank_qzeta = rank_cyclo_quot(a);
    out.rank_fp = rank_fp_quot(psi_matrix(a));
    return out;
}

} // namespace kzn
