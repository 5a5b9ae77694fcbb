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
#include "kzn/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kzn {

uint32_t ceil_log(uint64_t p, uint64_t n) {
    uint32_t a = 0;
    unsigned __int128 power = 1;
    while (power < n) {
        power *= p;
        ++a;
    }
    return a;
}

Rat lb_squarefree(const Factorization& f, uint32_t n) {
    if (!f.square_free())
        throw std::invalid_argument("lb_squarefree: N must be square-free");
    unsigned long r = f.factors.size();
    Rat out(int_pow(Int(static_cast<unsigned long>(f.n)), n),
            int_pow(Int(2), r * n));
    out.canonicalize();
    return out;
}

Rat lb_pk(uint64_t p, uint32_t k, uint32_t n) {
    Rat out(int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(k) * n),
            int_pow(Int(static_cast<unsigned long>(k) * n), n));
    out.canonicalize();
    return out;
}

TwoBranch lb_m_eps(uint64_t p, uint32_t k, uint32_t n, uint64_t m, const Rat& eps) {
    Int pk = int_pow(Int(static_cast<unsigned long>(p)), k);
    if (m < 1 || Int(static_cast<unsigned long>(m)) > pk)
        throw std::invalid_argument("lb_m_eps: need 1 <= m <= p^k");
    if (eps < 0 || eps > 1) throw std::invalid_argument("lb_m_eps: need 0 <= eps <= 1");
    Int mn = int_pow(Int(static_cast<unsigned long>(m)), n);
    TwoBranch out;
    {
        Int den = int_pow(Int(2 * (static_cast<unsigned long>(k) + ceil_log(p, n))), n);
        Rat v(mn, den);
        v.canonicalize();
        out.general = eps * v;
        out.general.canonicalize();
    }
    if (p > n) {
        // m^n / (k+1)^n * (1 + n/p)^{-n} = m^n p^n / ((k+1)^n (p+n)^n)
        Int num = mn * int_pow(Int(static_cast<unsigned long>(p)), n);
        Int den = int_pow(Int(static_cast<unsigned long>(k) + 1), n) *
                  int_pow(Int(static_cast<unsigned long>(p + n)), n);
        Rat v(num, den);
        v.canonicalize();
        Rat sharper = eps * v;
        sharper.canonicalize();
        out.sharper = sharper;
    }
    return out;
}

TwoBranch lb_general(const Factorization& f, uint32_t n) {
    Int nn = int_pow(Int(static_cast<unsigned long>(f.n)), n);
    TwoBranch out;
    {
        Int den = 1;
        for (const auto& pp : f.factors)
            den *= int_pow(Int(2 * (static_cast<unsigned long>(pp.k) + ceil_log(pp.p, n))), n);
        out.general = Rat(nn, den);
        out.general.canonicalize();
    }
    bool sharper_ok = true;
    for (const auto& pp : f.factors)
        if (pp.p <= n) sharper_ok = false;
    if (sharper_ok) {
        Int num = nn, den = 1;
        for (const auto& pp : f.factors) {
            num *= int_pow(Int(static_cast<unsigned long>(pp.p)), n);
            den *= int_pow(Int(static_cast<unsigned long>(pp.k) + 1), n) *
                   int_pow(Int(static_cast<unsigned long>(pp.p) + n), n);
        }
        Rat v(num, den);
        v.canonicalize();
        out.sharper = v;
    }
    return out;
}

ConstructionBound ub_construction(uint32_t p, uint32_t s, uint32_t n) {
    Int ps1 = int_pow(Int(p), s + 1);
    Int k_int = (ps1 - 1) / (p - 1);
    unsigned long k = k_int.get_ui();
    ConstructionBound out;
    // sum_{i=1}^n p^{ki} / (k^{i-1} (1-1/p)^{i-1})
    Rat one_minus(Int(p - 1), Int(p));
    one_minus.canonicalize();
    Rat sum = 0;
    for (uint32_t i = 1; i <= n; ++i) {
        Rat term(int_pow(Int(p), k * i), int_pow(Int(k), i - 1));
        term.canonicalize();
        term /= rat_pow(one_minus, i - 1);
        sum += term;
    }
    sum.canonicalize();
    out.sum_form = sum;
    // p^{kn} / k^{n-1} * (1-1/p)^{-n}
    Rat closed(int_pow(Int(p), k * n), int_pow(Int(k), n - 1));
    closed.canonicalize();
    closed /= rat_pow(one_minus, n);
    closed.canonicalize();
    out.closed_form = closed;
    // n * p^{kn - s(n-1)}
    out.certified = Int(n) * int_pow(Int(p), k * n - static_cast<unsigned long>(s) * (n - 1));
    return out;
}

ConstructionBound ub_construction_n(const std::vector<std::pair<uint32_t, uint32_t>>& spec,
                                    uint32_t n) {
    if (spec.empty()) throw std::invalid_argument("ub_construction_n: empty spec");
    ConstructionBound out;
    out.sum_form = 1;
    out.closed_form = 1;
    out.certified = 1;
    for (const auto& [p, s] : spec) {
        ConstructionBound part = ub_construction(p, s, n);
        out.sum_form *= part.sum_form;
        out.closed_form *= part.closed_form;
        out.certified *= part.certified;
    }
    out.sum_form.canonicalize();
    out.closed_form.canonicalize();
    return out;
}

std::vector<std::string> lower_bound_violations(const Int& size, const Factorization& f,
                                                uint32_t n) {
    std::vector<std::string> out;
    Rat sz(size);
    if (sz < lb_general(f, n).best()) out.push_back("lb_general");
    if (f.square_free() && sz < lb_squarefree(f, n)) out.push_back("lb_squarefree");
    if (f.factors.size() == 1) {
        const auto& pp = f.factors[0];
        if (sz < lb_pk(pp.p, pp.k, n)) out.push_back("lb_pk");
        if (sz < lb_m_eps(pp.p, pp.k, n, f.n, Rat(1)).best()) out.push_back("lb_m_eps");
    }
    return out;
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "kzn/1";
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json item;
        item["name"] = row.name;
        item["params"] = nlohmann::json::object();
        for (const auto& [key, val] : row.params) item["params"][key] = val;
        item["value"] = rat_str(row.value);
        item["approx"] = rat_decimal(row.value);
        if (!row.note.empty()) item["note"] = row.note;
        j["rows"].push_back(std::move(item));
    }
    return j.dump(2);
}

std::string BoundReport::to_csv() const {
    std::ostringstream os;
    os << "name,params,value,approx,note\n";
    for (const auto& row : rows) {
        os << row.name << ",\"";
        for (size_t i = 0; i < row.params.size(); ++i) {
            if (i) os << " ";
            os << row.params[i].first << "=" << row.params[i].second;
        }
        os << "\"," << rat_str(row.value) << "," << rat_decimal(row.value) << "," << row.note
           << "\n";
    }
    return os.str();
}

bool BoundReport::all_pass() const {
    for (const auto& row : rows)
        if (row.note == "fail") return false;
    return true;
}

} // namespace kzn
