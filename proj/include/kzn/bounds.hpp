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
#ifndef KZN_BOUNDS_HPP
#define KZN_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kzn/rat.hpp"
#include "kzn/ring.hpp"

namespace kzn {

// Smallest a >= 0 with p^a >= n.
uint32_t ceil_log(uint64_t p, uint64_t n);

// Square-free N = p_1...p_r:  2^{-rn} N^n.
Rat lb_squarefree(const Factorization& f, uint32_t n);

// Prime powers:  (kn)^{-n} p^{kn}.
Rat lb_pk(uint64_t p, uint32_t k, uint32_t n);

// A lower bound with a general branch and a sharper branch that applies
// only when every prime exceeds n.
struct TwoBranch {
    Rat general;
    std::optional<Rat> sharper;

    Rat best() const { return sharper && *sharper > general ? *sharper : general; }
};

// (m, eps)-sets over Z/p^k Z:
//   general:  eps * m^n / (2(k + ceil_log p(n)))^n
//   p > n:    eps * m^n / (k+1)^n * (1 + n/p)^{-n}
// Requires 1 <= m <= p^k and 0 <= eps <= 1.
TwoBranch lb_m_eps(uint64_t p, uint32_t k, uint32_t n, uint64_t m, const Rat& eps);

// Kakeya sets over Z/NZ:
//   general:  N^n * prod_i (2(k_i + ceil_log p_i(n)))^{-n}
//   all p_i > n:  N^n * prod_i (k_i+1)^{-n} (1 + n/p_i)^{-n}
TwoBranch lb_general(const Factorization& f, uint32_t n);

// Construction size bounds for p^k with k = (p^{s+1}-1)/(p-1).
struct ConstructionBound {
    Rat sum_form;    // sum_{i=1}^n p^{ki} / (k^{i-1} (1-1/p)^{i-1})
    Rat closed_form; // p^{kn} / k^{n-1} * (1-1/p)^{-n}
    Int certified;   // n * p^{kn - s(n-1)}, met by the union construction
};

ConstructionBound ub_construction(uint32_t p, uint32_t s, uint32_t n);
// CRT products: closed form N^n/(k_1^{n-1}...k_r^{n-1}) prod (1-1/p_i)^{-n};
// certified bound is the product of the per-factor certified bounds.
ConstructionBound ub_construction_n(const std::vector<std::pair<uint32_t, uint32_t>>& spec,
                                    uint32_t n);

// Names of the applicable lower bounds that `size` violates (empty means
// consistent).  Checks lb_general always, plus lb_squarefree / lb_pk /
// lb_m_eps(m=N, eps=1) where applicable.
std::vector<std::string> lower_bound_violations(const Int& size, const Factorization& f,
                                                uint32_t n);

// One row of a report document: a named exact value with its parameters.
struct ReportRow {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    Rat value;
    std::string note; // "", "pass" or "fail"
};

struct BoundReport {
    std::vector<ReportRow> rows;

    std::string to_json() const; // schema "kzn/1"
    std::string to_csv() const;
    bool all_pass() const;
};

} // namespace kzn

#endif
