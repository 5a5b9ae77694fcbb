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

#include <set>

#include "kzn/bounds.hpp"
#include "kzn/errors.hpp"
#include "kzn/kakeya.hpp"
#include "support.hpp"

using namespace kzn;

namespace {

// global harness rule: every verified Kakeya set satisfies every applicable
// lower-bound formula
void check_bound_consistency(const PointSet& s) {
    auto violations =
        lower_bound_violations(Int(static_cast<unsigned long>(s.size())),
                               factorize(s.modulus), s.dim);
    CHECK(violations.empty());
}

} // namespace

TEST_CASE("c-sequences") {
    CHECK(build_c_sequence(3, 1).values == std::vector<uint64_t>{2, 1, 0, 0});
    CHECK(build_c_sequence(2, 1).values == std::vector<uint64_t>{1, 0, 0});
    CHECK(build_c_sequence(3, 2).values ==
          std::vector<uint64_t>{8, 5, 2, 2, 7, 4, 1, 1, 6, 3, 0, 0, 0});
    CHECK(build_c_sequence(2, 2).values == std::vector<uint64_t>{3, 1, 1, 2, 0, 0, 0});
    CHECK(build_c_sequence(5, 0).values == std::vector<uint64_t>{0});
    CHECK(build_c_sequence(2, 3).k == 15);
}

TEST_CASE("c-sequence invariants") {
    for (auto [p, s] : std::vector<std::pair<uint32_t, uint32_t>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        CSequence c = build_c_sequence(p, s);
        uint64_t ps = 1;
        for (uint32_t i = 0; i < s; ++i) ps *= p;
        REQUIRE(c.values.size() == c.k);
        CHECK(c.values[0] == ps - 1);

        // once zero, always zero; and zero appears exactly s+1 times
        uint64_t zeros = 0;
        bool seen_zero = false;
        for (uint64_t v : c.values) {
            if (seen_zero) CHECK(v == 0);
            if (v == 0) {
                seen_zero = true;
                ++zeros;
            }
        }
        CHECK(zeros == s + 1);

        // multiplicity audit: nonzero values appear at most
        // (zero high-order digits) + 1 times
        std::map<uint64_t, uint64_t> mult;
        for (uint64_t v : c.values) ++mult[v];
        for (const auto& [v, count] : mult) {
            if (v == 0) continue;
            auto digits = p_digits(v, p, s);
            uint32_t zero_top = 0;
            for (uint32_t i = s; i-- > 0 && digits[i] == 0;) ++zero_top;
            CHECK(count <= zero_top + 1);
        }

        // first-visit congruences: c_{beta+i} = t' (mod p^{s-i})
        for (uint64_t target = 0; target < ps; ++target) {
            uint64_t beta = c.k;
            for (uint64_t i = 0; i < c.k; ++i)
                if (c.values[i] == target) {
                    beta = i;
                    break;
                }
            REQUIRE(beta < c.k); // every value is visited
            for (uint32_t i = 0; i < s; ++i) {
                REQUIRE(beta + i < c.k);
                uint64_t mod = 1;
                for (uint32_t e = 0; e < s - i; ++e) mod *= p;
                CHECK(c.values[beta + i] % mod == target % mod);
            }
        }
    }
}

TEST_CASE("g evaluation") {
    CSequence c31 = build_c_sequence(3, 1);
    CHECK(g_eval(5, c31) == 7); // digits (2,1): 2*2 + 1*1*3
    CHECK(g_eval(0, c31) == 0);
    CSequence c21 = build_c_sequence(2, 1);
    for (uint64_t u = 0; u < 8; ++u) CHECK(g_eval(u, c21) == u % 2);
}

TEST_CASE("g image check") {
    auto r31 = g_image_check(3, 1, GImageMode::Exhaustive);
    CHECK(r31.max_image == 27);
    CHECK(r31.sharp == 27);
    CHECK(r31.bound_floor == 30); // floor(243/8)
    CHECK(r31.pass);
    CHECK(g_image_size(build_c_sequence(3, 1), 0) == 9);

    auto r21 = g_image_check(2, 1, GImageMode::Exhaustive);
    CHECK(r21.max_image == 4);
    CHECK(r21.pass);

    auto r22 = g_image_check(2, 2, GImageMode::Exhaustive);
    CHECK(r22.max_image == 32); // equals p^{k-s}
    CHECK(r22.sharp == 32);
    CHECK(r22.bound_floor == 36); // floor(256/7)
    CHECK(r22.pass);

    // sampled mode stays within the exhaustive maximum
    auto sampled = g_image_check(3, 1, GImageMode::Sampled, 99);
    CHECK(sampled.max_image <= 27);
    CHECK(sampled.pass);

    CHECK_THROWS_AS(g_image_check(3, 2, GImageMode::Exhaustive), BudgetExceeded);
}

TEST_CASE("slice sizes of the unit-first construction") {
    // {x : (t,x) in S_2} has size at most p^{k-s} for every t
    for (auto [p, s] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
        CSequence c = build_c_sequence(p, s);
        uint64_t cap = 1;
        for (uint64_t i = 0; i < c.k - s; ++i) cap *= p;
        uint64_t total = 0;
        for (uint64_t t = 0; t < c.pk(); ++t) {
            uint64_t sz = g_image_size(c, t);
            CHECK(sz <= cap);
            total += sz;
        }
        auto built = construct_unit_first(p, s, 2);
        CHECK(built.points.size() == total);
    }
}

TEST_CASE("verify kakeya") {
    // full grid (Z/4Z)^2 is 4-rich in every direction
    std::vector<Vec> all;
    for (uint64_t x = 0; x < 4; ++x)
        for (uint64_t y = 0; y < 4; ++y) all.push_back({x, y});
    PointSet grid = PointSet::make(4, 2, all);
    auto rep = verify_kakeya(grid, 4);
    CHECK(rep.fraction == Rat(1));
    CHECK(rep.kakeya);
    CHECK(rep.worst_richness == 4);
    check_bound_consistency(grid);

    // a single point is never 2-rich
    PointSet lone = PointSet::make(2, 2, {{0, 0}});
    auto rep2 = verify_kakeya(lone, 2);
    CHECK(rep2.fraction == Rat(0));
    CHECK(rep2.satisfied == 0);

    // the 3-point corner set covers all 3 directions of (Z/2Z)^2 at m = 2
    PointSet corner = PointSet::make(2, 2, {{0, 0}, {1, 0}, {0, 1}});
    auto rep3 = verify_kakeya(corner, 2);
    CHECK(rep3.fraction == Rat(1));
    CHECK(rep3.kakeya);
    CHECK(rep3.witnesses.lines.size() == 3);
    check_bound_consistency(corner);

    CHECK_THROWS_AS(verify_kakeya(grid, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_kakeya(grid, 5), std::invalid_argument);
}

TEST_CASE("verify against provided witnesses only") {
    auto built = construct_kakeya_pk(2, 1, 2);
    auto rep = verify_kakeya(built.points, 8, &built.witness);
    CHECK(rep.kakeya);

    // dropping one witness leaves that direction unsatisfied
    KakeyaWitness partial = built.witness;
    partial.lines.erase(partial.lines.begin());
    auto rep2 = verify_kakeya(built.points, 8, &partial);
    CHECK(rep2.satisfied == rep.total_directions - 1);
    CHECK(!rep2.kakeya);
}

TEST_CASE("unit-first construction") {
    auto line = construct_unit_first(3, 1, 1);
    CHECK(line.points.size() == 81); // whole Z/p^k Z
    CHECK(line.points.modulus == 81);

    auto s212 = construct_unit_first(2, 1, 2);
    CHECK(s212.points.size() == 28);
    CHECK(s212.witness.lines.size() == 8); // directions (1, u)

    auto s312 = construct_unit_first(3, 1, 2);
    CHECK(s312.points.size() <= 2187);
    CHECK(s312.points.size() == 2025);

    // every witness line lies inside the set
    for (const auto& [dir, witness_line] : s212.witness.lines)
        CHECK(richness(s212.points, witness_line) == 8);
}

TEST_CASE("prime power construction") {
    auto f32 = construct_kakeya_pk(3, 0, 2);
    CHECK(f32.points.modulus == 3);
    auto rep = verify_kakeya(f32.points, 3, &f32.witness);
    CHECK(rep.kakeya);
    CHECK(construct_unit_first(3, 0, 2).points.size() == 7);
    check_bound_consistency(f32.points);

    auto k212 = construct_kakeya_pk(2, 1, 2);
    CHECK(k212.points.modulus == 8);
    CHECK(k212.points.size() <= 56);
    CHECK(k212.witness.lines.size() == 12);
    auto rep212 = verify_kakeya(k212.points, 8, &k212.witness);
    CHECK(rep212.kakeya);
    check_bound_consistency(k212.points);

    auto k312 = construct_kakeya_pk(3, 1, 2);
    CHECK(k312.points.modulus == 81);
    CHECK(k312.points.size() <= 4374);
    CHECK(k312.witness.lines.size() == 108);
    auto rep312 = verify_kakeya(k312.points, 81, &k312.witness);
    CHECK(rep312.kakeya);
    check_bound_consistency(k312.points);
}

TEST_CASE("CRT product construction") {
    // single factor reduces to the prime-power construction
    auto single = construct_kakeya_n({{2, 1}}, 2);
    auto direct = construct_kakeya_pk(2, 1, 2);
    CHECK(single.points.points == direct.points.points);

    // n = 1 gives the whole ring
    auto n24 = construct_kakeya_n({{2, 1}, {3, 0}}, 1);
    CHECK(n24.points.modulus == 24);
    CHECK(n24.points.size() == 24);

    // (Z/6Z)^2 via the field components
    auto n6 = construct_kakeya_n({{2, 0}, {3, 0}}, 2);
    CHECK(n6.points.modulus == 6);
    auto c2 = construct_kakeya_pk(2, 0, 2);
    auto c3 = construct_kakeya_pk(3, 0, 2);
    CHECK(n6.points.size() == c2.points.size() * c3.points.size());
    auto rep = verify_kakeya(n6.points, 6, &n6.witness);
    CHECK(rep.kakeya);
    auto full = verify_kakeya(n6.points, 6);
    CHECK(full.kakeya);
    check_bound_consistency(n6.points);

    CHECK_THROWS_AS(construct_kakeya_n({{2, 1}, {2, 0}}, 2), std::invalid_argument);
}

TEST_CASE("brute force minimum") {
    auto r22 = min_kakeya_bruteforce(2, 2);
    CHECK(r22.size == 3);
    CHECK(verify_kakeya(r22.witness_set, 2).kakeya);
    check_bound_consistency(r22.witness_set);

    auto r32 = min_kakeya_bruteforce(3, 2);
    CHECK(r32.size == 7);
    CHECK(verify_kakeya(r32.witness_set, 3).kakeya);
    check_bound_consistency(r32.witness_set);

    auto r21 = min_kakeya_bruteforce(2, 1);
    CHECK(r21.size == 2);

    auto r23 = min_kakeya_bruteforce(2, 3);
    CHECK(r23.size == 5);

    CHECK_THROWS_AS(min_kakeya_bruteforce(5, 2), BudgetExceeded);
}

TEST_CASE("greedy construction") {
    auto g22 = greedy_kakeya(2, 2, 1);
    CHECK(g22.points.size() <= 4);
    CHECK(g22.points.size() >= 3);
    CHECK(verify_kakeya(g22.points, 2, &g22.witness).kakeya);
    check_bound_consistency(g22.points);

    auto g42 = greedy_kakeya(4, 2, 7);
    CHECK(g42.points.size() <= 16);
    CHECK(verify_kakeya(g42.points, 4, &g42.witness).kakeya);
    check_bound_consistency(g42.points);

    auto g32 = greedy_kakeya(3, 2, 3);
    CHECK(g32.points.size() >= 7); // the brute-force floor
    check_bound_consistency(g32.points);
}

TEST_CASE("meets fraction threshold") {
    PointSet corner = PointSet::make(2, 2, {{0, 0}, {1, 0}, {0, 1}});
    auto rep = verify_kakeya(corner, 2);
    CHECK(meets_fraction(rep, Rat(1)));
    CHECK(meets_fraction(rep, Rat(2, 3)));
    PointSet lone = PointSet::make(2, 2, {{0, 0}});
    auto rep0 = verify_kakeya(lone, 2);
    CHECK(!meets_fraction(rep0, Rat(1, 3)));
    CHECK(meets_fraction(rep0, Rat(0)));
}

TEST_CASE("point set JSON") {
    PointSet s = PointSet::make(4, 2, {{0, 0}, {1, 2}, {3, 3}});
    auto text = point_set_to_json(s);
    PointSet back = point_set_from_json(text);
    CHECK(back.modulus == 4);
    CHECK(back.dim == 2);
    CHECK(back.points == s.points);

    CHECK_THROWS_AS(point_set_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(point_set_from_json("{\"N\":4,\"n\":2}"), std::invalid_argument);
    CHECK_THROWS_AS(
        point_set_from_json("{\"N\":4,\"n\":2,\"points\":[[0,0],[0,0]]}"),
        std::invalid_argument); // duplicate
    CHECK_THROWS_AS(
        point_set_from_json("{\"N\":4,\"n\":2,\"points\":[[4,0]]}"),
        std::invalid_argument); // out of range
    CHECK_THROWS_AS(
        point_set_from_json("{\"N\":4,\"n\":2,\"points\":[[1,2,3]]}"),
        std::invalid_argument); // arity
}

TEST_CASE("witness JSON roundtrip") {
    auto built = construct_kakeya_pk(2, 1, 2);
    auto text = witness_to_json(built.witness);
    auto back = witness_from_json(text, 8, 2);
    CHECK(back.lines.size() == built.witness.lines.size());
    auto rep = verify_kakeya(built.points, 8, &back);
    CHECK(rep.kakeya);

    CHECK_THROWS_AS(witness_from_json("{}", 8, 2), std::invalid_argument);
    CHECK_THROWS_AS(
        witness_from_json("{\"witnesses\":[{\"dir\":[2,4],\"base\":[0,0]}]}", 8, 2),
        std::invalid_argument); // not projective mod 8
}
