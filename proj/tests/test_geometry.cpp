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

#include <algorithm>
#include <map>
#include <set>

#include "kzn/geometry.hpp"
#include "support.hpp"

using namespace kzn;

TEST_CASE("canonicalize") {
    CHECK(canonicalize(Vec{3, 0}, 4)->rep == Vec{1, 0});
    CHECK(!canonicalize(Vec{2, 2}, 4).has_value());
    // no unit coordinate mod 4 in position order: (2,1) scales at index 1
    CHECK(canonicalize(Vec{2, 1}, 4)->rep == Vec{2, 1});
    // two vectors in one class share the canonical representative
    CHECK(canonicalize(Vec{2, 3}, 4)->rep == canonicalize(Vec{6, 1}, 4)->rep);
    // composite modulus with no global unit coordinate: lexicographic least
    CHECK(canonicalize(Vec{2, 3}, 6)->rep == Vec{2, 3});
    CHECK(canonicalize(Vec{4, 3}, 6)->rep == Vec{2, 3});
}

TEST_CASE("enumerate projective") {
    auto d22 = enumerate_projective(2, 2);
    std::set<Vec> reps;
    for (const auto& d : d22) reps.insert(d.rep);
    CHECK(reps == std::set<Vec>{{0, 1}, {1, 0}, {1, 1}});

    CHECK(enumerate_projective(4, 2).size() == 6);
    CHECK(enumerate_projective(6, 1).size() == 1);
    CHECK(enumerate_projective(8, 2).size() == 12);
    CHECK(enumerate_projective(81, 2).size() == 108);

    // deterministic (sorted) order, no duplicates
    auto d62 = enumerate_projective(6, 2);
    CHECK(std::is_sorted(d62.begin(), d62.end()));
    CHECK(std::adjacent_find(d62.begin(), d62.end()) == d62.end());
}

TEST_CASE("projective count closed form") {
    CHECK(projective_count(4, 2) == 6);
    CHECK(projective_count(9, 2) == 12);
    CHECK(projective_count(81, 2) == 108);
    for (uint64_t n = 2; n <= 30; ++n)
        for (uint32_t dim = 1; dim <= 3; ++dim)
            CHECK(projective_count(n, dim) ==
                  Int(static_cast<unsigned long>(enumerate_projective(n, dim).size())));
}

TEST_CASE("canonicalization lands in the enumeration and classes have size phi(N)") {
    for (uint64_t n : {4ULL, 6ULL, 8ULL, 12ULL}) {
        Factorization f = factorize(n);
        uint64_t phi = 0;
        for (uint64_t c = 1; c < n; ++c)
            if (gcd_u64(c, n) == 1) ++phi;
        for (uint32_t dim : {1u, 2u, 3u}) {
            if (n == 12 && dim == 3) continue; // 12^3 scan is past unit-test size
            auto dirs = enumerate_projective(n, dim);
            std::set<Vec> reps;
            for (const auto& d : dirs) reps.insert(d.rep);
            std::map<Vec, uint64_t> class_size;
            uint64_t cells = 1;
            for (uint32_t i = 0; i < dim; ++i) cells *= n;
            uint64_t projective_vectors = 0;
            for (uint64_t idx = 0; idx < cells; ++idx) {
                Vec v(dim);
                uint64_t rest = idx;
                for (uint32_t i = dim; i-- > 0;) {
                    v[i] = rest % n;
                    rest /= n;
                }
                auto canon = canonicalize(v, f);
                if (!canon) continue;
                ++projective_vectors;
                REQUIRE(reps.count(canon->rep) == 1);
                ++class_size[canon->rep];
            }
            CHECK(projective_vectors == phi * dirs.size());
            for (const auto& [rep, size] : class_size) CHECK(size == phi);
        }
    }
}

TEST_CASE("line points") {
    Line l{Vec{0, 0}, *canonicalize(Vec{1, 2}, 4)};
    auto pts = line_points(l);
    CHECK(pts == std::vector<Vec>{{0, 0}, {1, 2}, {2, 0}, {3, 2}});

    // exactly N distinct points for projective directions, small exhaustive
    for (uint64_t n : {4ULL, 6ULL, 9ULL}) {
        for (const auto& dir : enumerate_projective(n, 2)) {
            Line line{Vec{1 % n, 3 % n}, dir};
            auto points = line_points(line);
            std::set<Vec> distinct(points.begin(), points.end());
            CHECK(distinct.size() == n);
        }
    }
}

TEST_CASE("line CRT decomposition") {
    Factorization f12 = factorize(12);
    Line l{Vec{0, 0}, *canonicalize(Vec{1, 1}, 12)};
    auto parts = line_crt_decompose(l, f12);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].dir.modulus == 4);
    CHECK(parts[0].dir.rep == Vec{1, 1});
    CHECK(parts[1].dir.modulus == 3);
    CHECK(parts[1].dir.rep == Vec{1, 1});

    // prime modulus: a single component equal to the line itself
    Factorization f7 = factorize(7);
    Line l7{Vec{2, 3}, *canonicalize(Vec{1, 5}, 7)};
    auto parts7 = line_crt_decompose(l7, f7);
    REQUIRE(parts7.size() == 1);
    CHECK(line_points(parts7[0]) == line_points(l7));
}

TEST_CASE("CRT recombination of component point sets") {
    Factorization f = factorize(12);
    auto rng = test::make_rng(41);
    auto dirs = enumerate_projective(12, 2);
    for (int it = 0; it < 50; ++it) {
        Line line{Vec{rng() % 12, rng() % 12}, dirs[rng() % dirs.size()]};
        auto parts = line_crt_decompose(line, f);
        std::set<Vec> original;
        for (const auto& p : line_points(line)) original.insert(p);
        // product of the component point sets, recombined coordinatewise
        std::set<Vec> product;
        for (const auto& p0 : line_points(parts[0]))
            for (const auto& p1 : line_points(parts[1])) {
                Vec combined(2);
                for (size_t i = 0; i < 2; ++i)
                    combined[i] =
                        crt_combine({Zmod{p0[i], 4}, Zmod{p1[i], 3}}, f).value;
                product.insert(combined);
            }
        CHECK(product == original);
    }
}
