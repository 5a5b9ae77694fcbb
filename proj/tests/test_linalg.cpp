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
#include <doctest.h>

#include "kzn/linalg.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace kzn;

TEST_CASE("coeff matrix basics") {
    FpQuotient ring = FpQuotient::make_cyclic(2, 2); // F_2[z]/<z^2-1>
    Matrix<FpQuotient> a(ring, 1, 1);
    a.at(0, 0) = FpPoly{{1, 1}}; // z + 1
    auto c = coeff_matrix(a);
    REQUIRE(c.rows() == 2);
    REQUIRE(c.cols() == 1);
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(1, 0) == 1);

    // identity over the quotient: constant rows then zero rows, degree-major
    auto id = identity_matrix(ring, 3);
    auto ci = coeff_matrix(id);
    REQUIRE(ci.rows() == 6);
    for (size_t j = 0; j < 3; ++j)
        for (size_t col = 0; col < 3; ++col) {
            CHECK(ci.at(j, col) == (j == col ? 1 : 0));
            CHECK(ci.at(3 + j, col) == 0);
        }
}

TEST_CASE("rank over fields") {
    Fp f2{2};
    CHECK(matrix_rank(identity_matrix(f2, 4)) == 4);
    Matrix<Fp> zero(f2, 3, 3);
    CHECK(matrix_rank(zero) == 0);

    // [[1,2],[2,4]] over Q has rank 1
    CycloField rationals{2, 1};
    Matrix<CycloField> a(rationals, 2, 2);
    a.at(0, 0) = rationals.from_int(1);
    a.at(0, 1) = rationals.from_int(2);
    a.at(1, 0) = rationals.from_int(2);
    a.at(1, 1) = rationals.from_int(4);
    CHECK(matrix_rank(a) == 1);
}

TEST_CASE("rank of matrices over T-bar") {
    {
        FpQuotient ring = FpQuotient::make_cyclic(2, 2);
        Matrix<FpQuotient> one(ring, 1, 1);
        one.at(0, 0) = ring.one();
        CHECK(rank_fp_quot(one) == 1);
    }
    {
        // [[1, z], [z, z^2]] over F_2[z]/<z^4-1>: the second column is z times
        // the first, but ring-proportional columns are not F_2-dependent; the
        // coefficient matrix holds rows (1,0) and (0,1)
        FpQuotient ring = FpQuotient::make_cyclic(2, 4);
        Matrix<FpQuotient> a(ring, 2, 2);
        a.at(0, 0) = ring.monomial(0);
        a.at(0, 1) = ring.monomial(1);
        a.at(1, 0) = ring.monomial(1);
        a.at(1, 1) = ring.monomial(2);
        CHECK(rank_fp_quot(a) == 2);
    }
    {
        // M_{2,1} = [[1, 1], [1, z]] has full F_2-rank
        FpQuotient ring = FpQuotient::make_cyclic(2, 2);
        Matrix<FpQuotient> m(ring, 2, 2);
        m.at(0, 0) = ring.one();
        m.at(0, 1) = ring.one();
        m.at(1, 0) = ring.one();
        m.at(1, 1) = ring.monomial(1);
        CHECK(rank_fp_quot(m) == 2);
    }
}

TEST_CASE("crank basics") {
    Fp f2{2};
    Matrix<Fp> r1(f2, 1, 2), r2(f2, 1, 2);
    r1.at(0, 0) = 1;
    r2.at(0, 1) = 1;
    CHECK(crank(std::vector<Matrix<Fp>>{r1, r2}) == 2);

    auto rng = test::make_rng(3);
    FpQuotient ring = FpQuotient::make_cyclic(3, 3);
    auto a = test::random_quot_matrix(rng, ring, 2, 3);
    CHECK(crank(std::vector<Matrix<FpQuotient>>{a, a}) == rank_fp_quot(a));
    CHECK(crank(std::vector<Matrix<FpQuotient>>{a}) == rank_fp_quot(a));
    CHECK_THROWS_AS(crank(std::vector<Matrix<Fp>>{}), std::invalid_argument);
}

TEST_CASE("kronecker products") {
    Fp f3{3};
    auto rng = test::make_rng(5);
    auto b = test::random_fp_matrix(rng, f3, 2, 2);
    auto kb = kron(identity_matrix(f3, 2), b);
    REQUIRE(kb.rows() == 4);
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 2; ++c) {
            CHECK(kb.at(r, c) == b.at(r, c));
            CHECK(kb.at(2 + r, 2 + c) == b.at(r, c));
            CHECK(kb.at(r, 2 + c) == 0);
            CHECK(kb.at(2 + r, c) == 0);
        }

    // 1x1 (x) A is a scalar multiple
    Matrix<Fp> s(f3, 1, 1);
    s.at(0, 0) = 2;
    auto sb = kron(s, b);
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 2; ++c) CHECK(sb.at(r, c) == f3.mul(2, b.at(r, c)));
}

TEST_CASE("coeff of mixed kronecker equals kronecker of coeff") {
    auto rng = test::make_rng(17);
    for (int it = 0; it < 100; ++it) {
        FpQuotient ring = test::random_quotient_ring(rng);
        auto a = test::random_quot_matrix(rng, ring, 1 + rng() % 3, 1 + rng() % 3);
        auto b = test::random_fp_matrix(rng, ring.field, 1 + rng() % 3, 1 + rng() % 3);
        CHECK(coeff_matrix(kron(a, b)) == kron(coeff_matrix(a), b));
    }
}

TEST_CASE("rank invariance under permutations and invertible factors") {
    auto rng = test::make_rng(29);
    for (int it = 0; it < 500; ++it) {
        Fp f{it % 2 == 0 ? 2u : 5u};
        size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
        auto a = test::random_fp_matrix(rng, f, rows, cols);
        size_t r = matrix_rank(a);

        auto b = a;
        b.swap_rows(rng() % rows, rng() % rows);
        CHECK(matrix_rank(b) == r);

        auto left = test::random_invertible_fp(rng, f, rows);
        auto right = test::random_invertible_fp(rng, f, cols);
        CHECK(matrix_rank(multiply(left, a)) == r);
        CHECK(matrix_rank(multiply(a, right)) == r);
    }
}

TEST_CASE("quotient rank pair examples") {
    CycloField f{2, 2};
    CycloQuotient ring = CycloQuotient::make_cyclic(f, 2);
    {
        Matrix<CycloQuotient> a(ring, 1, 1);
        a.at(0, 0) = ring.scalar(f.from_int(2)); // the prime p
        auto pair = quotient_rank_pair(a);
        CHECK(pair.rank_qzeta == 1);
        CHECK(pair.rank_fp == 0);
    }
    {
        Matrix<CycloQuotient> a(ring, 1, 1);
        a.at(0, 0) = ring.one();
        auto pair = quotient_rank_pair(a);
        CHECK(pair.rank_qzeta == 1);
        CHECK(pair.rank_fp == 1);
    }
}

TEST_CASE("matrix inverse") {
    auto rng = test::make_rng(31);
    CycloField f{3, 1};
    for (int it = 0; it < 20; ++it) {
        size_t n = 1 + rng() % 4;
        Matrix<CycloField> a(f, n, n);
        do {
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) a.at(r, c) = test::random_cyclo(rng, f);
        } while (matrix_rank(a) != n);
        auto inv = matrix_inverse(a);
        CHECK(multiply(a, inv) == identity_matrix(f, n));
    }
    Matrix<CycloField> sing(f, 2, 2);
    CHECK_THROWS_AS(matrix_inverse(sing), std::logic_error);
}

TEST_CASE("property suites, reduced instance counts") {
    CHECK(test::suite_crank_mat_mult(200, 101) == 0);
    CHECK(test::suite_kron_mult(200, 102) == 0);
    CHECK(test::suite_crank_tensor(200, 103) == 0);
    CHECK(test::suite_coeff_equivalence(200, 104) == 0);
    CHECK(test::suite_psi_rank_drop(100, 105) == 0);
}
