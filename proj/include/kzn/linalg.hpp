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
#ifndef KZN_LINALG_HPP
#define KZN_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kzn/cyclotomic.hpp"
#include "kzn/fp.hpp"

namespace kzn {

// Dense row-major matrix over a tagged ring.  Ring tags: Fp, FpQuotient
// (F_p[z]/<f>), CycloField (Q(zeta)) and CycloQuotient (Q(zeta)[z]/<h>).
// Values are immutable once built up; rank and friends work on private
// copies.
template <typename R>
class Matrix {
public:
    using Ring = R;
    using Elem = typename R::Elem;

    Matrix(R ring, size_t rows, size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          e_(rows * cols, ring_.zero()) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const R& ring() const { return ring_; }

    Elem& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const Elem& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    void swap_rows(size_t r1, size_t r2) {
        if (r1 == r2) return;
        for (size_t j = 0; j < cols_; ++j)
            std::swap(e_[r1 * cols_ + j], e_[r2 * cols_ + j]);
    }

    bool operator==(const Matrix& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    R ring_;
    size_t rows_, cols_;
    std::vector<Elem> e_;
};

template <typename R>
inline constexpr bool is_field_ring_v = false;
template <>
inline constexpr bool is_field_ring_v<Fp> = true;
template <>
inline constexpr bool is_field_ring_v<CycloField> = true;

template <typename R>
Matrix<R> identity_matrix(R ring, size_t n) {
    Matrix<R> m(std::move(ring), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = m.ring().one();
    return m;
}

template <typename R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("multiply: ring mismatch");
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: dimension mismatch");
    const R& ring = a.ring();
    Matrix<R> out(ring, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a.at(i, k);
            if (ring.is_zero(aik)) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = ring.add(out.at(i, j), ring.mul(aik, b.at(k, j)));
        }
    return out;
}

// Kronecker product with A-major index order: entry ((r1,r2),(c1,c2)) is
// A(r1,c1) * B(r2,c2).  Same-ring version is restricted to field rings;
// with polynomial entries use the mixed overloads below, which keep at
// most one factor polynomial-valued.
template <typename R>
Matrix<R> kron(const Matrix<R>& a, const Matrix<R>& b) {
    static_assert(is_field_ring_v<R>,
                  "kron over a quotient ring needs the mixed (ring x field) overloads");
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("kron: ring mismatch");
    const R& ring = a.ring();
    Matrix<R> out(ring, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t r1 = 0; r1 < a.rows(); ++r1)
        for (size_t r2 = 0; r2 < b.rows(); ++r2)
            for (size_t c1 = 0; c1 < a.cols(); ++c1)
                for (size_t c2 = 0; c2 < b.cols(); ++c2)
                    out.at(r1 * b.rows() + r2, c1 * b.cols() + c2) =
                        ring.mul(a.at(r1, c1), b.at(r2, c2));
    return out;
}

Matrix<FpQuotient> kron(const Matrix<FpQuotient>& a, const Matrix<Fp>& b);
Matrix<FpQuotient> kron(const Matrix<Fp>& a, const Matrix<FpQuotient>& b);

// Coefficient matrix: expands each polynomial entry into its z-coefficients.
// Output has d * rows rows in degree-major order (row (i, j) at index
// i * rows + j holds the z^i coefficients of input row j), which makes
// Coeff(A (x) B) = Coeff(A) (x) B an entrywise identity for field-valued B.
Matrix<Fp> coeff_matrix(const Matrix<FpQuotient>& a);
Matrix<CycloField> coeff_matrix(const Matrix<CycloQuotient>& a);

// Exact column rank by Gaussian elimination with deterministic pivoting
// (first nonzero in column order).
template <typename F>
size_t matrix_rank(Matrix<F> a) {
    static_assert(is_field_ring_v<F>, "rank by elimination needs a field ring");
    const F& f = a.ring();
    size_t rank = 0;
    for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        size_t pivot = rank;
        while (pivot < a.rows() && f.is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(rank, pivot);
        auto inv_p = f.inv(a.at(rank, col));
        for (size_t j = col; j < a.cols(); ++j)
            a.at(rank, j) = f.mul(a.at(rank, j), inv_p);
        for (size_t r = rank + 1; r < a.rows(); ++r) {
            auto factor = a.at(r, col);
            if (f.is_zero(factor)) continue;
            for (size_t j = col; j < a.cols(); ++j)
                a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

// Gauss-Jordan inverse; throws std::logic_error on a singular input.
template <typename F>
Matrix<F> matrix_inverse(const Matrix<F>& m) {
    static_assert(is_field_ring_v<F>);
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_inverse: not square");
    const F& f = m.ring();
    size_t n = m.rows();
    Matrix<F> a = m;
    Matrix<F> inv = identity_matrix(f, n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && f.is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == n) throw std::logic_error("matrix_inverse: singular matrix");
        a.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        auto s = f.inv(a.at(col, col));
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(a.at(col, j), s);
            inv.at(col, j) = f.mul(inv.at(col, j), s);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            auto factor = a.at(r, col);
            if (f.is_zero(factor)) continue;
            for (size_t j = 0; j < n; ++j) {
                a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
                inv.at(r, j) = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

// F_p-rank of a matrix over F_p[z]/<f> via its coefficient matrix.
size_t rank_fp_quot(const Matrix<FpQuotient>& a);
// Q(zeta)-rank of a matrix over Q(zeta)[z]/<h> via its coefficient matrix.
size_t rank_cyclo_quot(const Matrix<CycloQuotient>& a);

// Vertical concatenation of a family sharing a column count.
template <typename R>
Matrix<R> vstack(const std::vector<Matrix<R>>& family) {
    if (family.empty()) throw std::invalid_argument("vstack: empty family");
    size_t cols = family[0].cols(), rows = 0;
    for (const auto& m : family) {
        if (m.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
        if (!(m.ring() == family[0].ring()))
            throw std::invalid_argument("vstack: ring mismatch");
        rows += m.rows();
    }
    Matrix<R> out(family[0].ring(), rows, cols);
    size_t r0 = 0;
    for (const auto& m : family) {
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < cols; ++c) out.at(r0 + r, c) = m.at(r, c);
        r0 += m.rows();
    }
    return out;
}

// crank of a family: rank of the column-wise concatenation, over the base
// field (polynomial entries go through the coefficient matrix).
size_t crank(const std::vector<Matrix<Fp>>& family);
size_t crank(const std::vector<Matrix<FpQuotient>>& family);
size_t crank(const std::vector<Matrix<CycloField>>& family);
size_t crank(const std::vector<Matrix<CycloQuotient>>& family);

// Entry-wise quotient map psi on a matrix over T_ell^k (cyclic modulus
// required); lands in T-bar_ell.
Matrix<FpQuotient> psi_matrix(const Matrix<CycloQuotient>& a);

struct QuotientRankPair {
    size_t rank_qzeta = 0;
    size_t rank_fp = 0;
};

// (rank over Q(zeta), rank over F_p of psi(A)); the first is never smaller.
QuotientRankPair quotient_rank_pair(const Matrix<CycloQuotient>& a);

} // namespace kzn

#endif
