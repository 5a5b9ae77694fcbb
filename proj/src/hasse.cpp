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
#include "kzn/hasse.hpp"

#include <algorithm>
#include <stdexcept>

#include "kzn/linalg.hpp"
#include "kzn/ring.hpp"

namespace kzn {

MultiPoly MultiPoly::zero(CycloField field, uint32_t nvars) {
    return MultiPoly{field, nvars, {}};
}

MultiPoly MultiPoly::monomial(CycloField field, std::vector<uint32_t> exps, CycloNumber coef) {
    MultiPoly f = zero(field, static_cast<uint32_t>(exps.size()));
    f.add_term(exps, coef);
    return f;
}

void MultiPoly::add_term(const std::vector<uint32_t>& exps, const CycloNumber& coef) {
    if (exps.size() != nvars) throw std::invalid_argument("MultiPoly: wrong exponent arity");
    if (field.is_zero(coef)) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
        terms.emplace(exps, coef);
        return;
    }
    it->second = field.add(it->second, coef);
    if (field.is_zero(it->second)) terms.erase(it);
}

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = MultiPoly::zero(a.field, a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<uint32_t> e(a.nvars);
            for (uint32_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, a.field.mul(ca, cb));
        }
    return out;
}

MultiPoly mp_scale(const MultiPoly& a, const CycloNumber& s) {
    MultiPoly out = MultiPoly::zero(a.field, a.nvars);
    for (const auto& [e, c] : a.terms) out.add_term(e, a.field.mul(c, s));
    return out;
}

CycloNumber mp_eval(const MultiPoly& f, const std::vector<CycloNumber>& y) {
    if (y.size() != f.nvars) throw std::invalid_argument("mp_eval: wrong point arity");
    CycloNumber acc = f.field.zero();
    for (const auto& [e, c] : f.terms) {
        CycloNumber term = c;
        for (uint32_t i = 0; i < f.nvars; ++i)
            for (uint32_t rep = 0; rep < e[i]; ++rep) term = f.field.mul(term, y[i]);
        acc = f.field.add(acc, term);
    }
    return acc;
}

uint32_t weight(const std::vector<uint32_t>& alpha) {
    uint32_t w = 0;
    for (uint32_t a : alpha) w += a;
    return w;
}

MultiPoly hasse_derivative(const MultiPoly& f, const std::vector<uint32_t>& alpha) {
    if (alpha.size() != f.nvars)
        throw std::invalid_argument("hasse_derivative: wrong index arity");
    MultiPoly out = MultiPoly::zero(f.field, f.nvars);
    for (const auto& [v, c] : f.terms) {
        bool alive = true;
        Int binom = 1;
        std::vector<uint32_t> e(f.nvars);
        for (uint32_t i = 0; i < f.nvars; ++i) {
            if (v[i] < alpha[i]) {
                alive = false;
                break;
            }
            binom *= binom_exact(v[i], alpha[i]);
            e[i] = v[i] - alpha[i];
        }
        if (!alive) continue;
        out.add_term(e, f.field.mul_rat(c, Rat(binom)));
    }
    return out;
}

std::vector<CycloNumber> eval_vector(uint32_t d, uint32_t n, const std::vector<uint32_t>& alpha,
                                     const std::vector<CycloNumber>& y,
                                     const CycloField& field) {
    if (alpha.size() != n || y.size() != n)
        throw std::invalid_argument("eval_vector: arity mismatch");
    uint64_t cols = 1;
    for (uint32_t i = 0; i < n; ++i) cols *= d;
    std::vector<CycloNumber> out(cols, field.zero());
    // precompute y_i^e for e < d
    std::vector<std::vector<CycloNumber>> pows(n);
    for (uint32_t i = 0; i < n; ++i) {
        pows[i].reserve(d);
        pows[i].push_back(field.one());
        for (uint32_t e = 1; e < d; ++e) pows[i].push_back(field.mul(pows[i].back(), y[i]));
    }
    std::vector<uint32_t> v(n, 0);
    for (uint64_t idx = 0; idx < cols; ++idx) {
        uint64_t rest = idx;
        for (uint32_t i = n; i-- > 0;) {
            v[i] = static_cast<uint32_t>(rest % d);
            rest /= d;
        }
        CycloNumber entry = field.one();
        bool alive = true;
        for (uint32_t i = 0; i < n; ++i) {
            if (v[i] < alpha[i]) {
                alive = false;
                break;
            }
            Int binom = binom_exact(v[i], alpha[i]);
            entry = field.mul_rat(field.mul(entry, pows[i][v[i] - alpha[i]]), Rat(binom));
        }
        if (alive) out[idx] = entry;
    }
    return out;
}

namespace {

// truncated series in eps of (gamma + eps)^{u} - gamma^{u}, coefficients
// indexed 0..w
std::vector<CycloNumber> delta_series(uint64_t u, uint32_t w, const CycloNumber& gamma,
                                      const CycloField& field) {
    std::vector<CycloNumber> s(w + 1, field.zero());
    std::vector<CycloNumber> gpow(1, field.one()); // gamma^e
    for (uint64_t e = 1; e <= u && e <= static_cast<uint64_t>(w); ++e)
        gpow.push_back(field.mul(gpow.back(), gamma));
    for (uint32_t j = 1; j <= w; ++j) {
        if (j > u) break;
        // C(u, j) * gamma^{u-j}; gamma^{u-j} built from scratch only once
        CycloNumber g = field.one();
        for (uint64_t e = 0; e < u - j; ++e) g = field.mul(g, gamma);
        s[j] = field.mul_rat(g, Rat(binom_exact(u, j)));
    }
    return s;
}

std::vector<CycloNumber> series_mul(const std::vector<CycloNumber>& a,
                                    const std::vector<CycloNumber>& b, uint32_t w,
                                    const CycloField& field) {
    std::vector<CycloNumber> out(w + 1, field.zero());
    for (uint32_t i = 0; i <= w; ++i) {
        if (field.is_zero(a[i])) continue;
        for (uint32_t j = 0; i + j <= w; ++j) {
            if (field.is_zero(b[j])) continue;
            out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
        }
    }
    return out;
}

void enumerate_alphas(uint32_t n, uint32_t w, std::vector<uint32_t>& cur, size_t pos,
                      uint32_t used, std::vector<std::vector<uint32_t>>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (uint32_t a = 0; a + used <= w; ++a) {
        cur[pos] = a;
        enumerate_alphas(n, w, cur, pos + 1, used + a, out);
    }
    cur[pos] = 0;
}

} // namespace

std::map<std::vector<uint32_t>, CycloNumber> composition_coeffs(const std::vector<uint64_t>& u,
                                                                uint32_t w,
                                                                const CycloNumber& gamma) {
    CycloField field{gamma.p, gamma.k};
    uint32_t n = static_cast<uint32_t>(u.size());
    std::vector<std::vector<CycloNumber>> deltas(n);
    for (uint32_t i = 0; i < n; ++i) deltas[i] = delta_series(u[i], w, gamma, field);

    std::vector<std::vector<uint32_t>> alphas;
    std::vector<uint32_t> cur(n, 0);
    enumerate_alphas(n, w, cur, 0, 0, alphas);

    std::map<std::vector<uint32_t>, CycloNumber> out;
    for (const auto& alpha : alphas) {
        std::vector<CycloNumber> prod(w + 1, field.zero());
        prod[0] = field.one();
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t rep = 0; rep < alpha[i]; ++rep)
                prod = series_mul(prod, deltas[i], w, field);
        out.emplace(alpha, prod[w]);
    }
    return out;
}

HermiteSystem hermite_coeffs(const CycloField& field,
                             const std::vector<std::pair<CycloNumber, uint32_t>>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("hermite_coeffs: no nodes");
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].second == 0)
            throw std::invalid_argument("hermite_coeffs: zero multiplicity");
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::invalid_argument("hermite_coeffs: repeated node");
    }
    uint64_t d = 0;
    for (const auto& [a, m] : nodes) d += m;

    // h = prod (z - a_i)^{m_i}
    std::vector<CycloNumber> h(1, field.one());
    for (const auto& [a, m] : nodes) {
        for (uint32_t rep = 0; rep < m; ++rep) {
            std::vector<CycloNumber> next(h.size() + 1, field.zero());
            for (size_t i = 0; i < h.size(); ++i) {
                next[i + 1] = field.add(next[i + 1], h[i]);
                next[i] = field.sub(next[i], field.mul(h[i], a));
            }
            h = std::move(next);
        }
    }

    // evaluation map on the coefficient basis: row (i,j), column m holds
    // C(m, j) a_i^{m-j}
    Matrix<CycloField> eval(field, d, d);
    size_t row = 0;
    for (const auto& [a, mult] : nodes) {
        std::vector<CycloNumber> apow(1, field.one());
        for (uint64_t e = 1; e < d; ++e) apow.push_back(field.mul(apow.back(), a));
        for (uint32_t j = 0; j < mult; ++j, ++row)
            for (uint64_t m = j; m < d; ++m)
                eval.at(row, m) = field.mul_rat(apow[m - j], Rat(binom_exact(m, j)));
    }
    Matrix<CycloField> inv = matrix_inverse(eval); // singularity = internal error

    HermiteSystem sys{CycloQuotient::make(field, std::move(h)), nodes, {}};
    row = 0;
    for (size_t i = 0; i < nodes.size(); ++i)
        for (uint32_t j = 0; j < nodes[i].second; ++j, ++row) {
            ZetaPoly t = sys.ring.zero();
            for (uint64_t m = 0; m < d; ++m) t.c[m] = inv.at(m, row);
            sys.t.emplace(std::make_pair(i, j), std::move(t));
        }
    return sys;
}

WeightFunction WeightFunction::uniform(const Line& line, uint32_t value) {
    WeightFunction w;
    for (const auto& p : line_points(line)) w.weights.emplace(p, value);
    return w;
}

WeightFunction WeightFunction::concentrated(const Line& line, const Vec& point, uint32_t total) {
    WeightFunction w;
    bool on_line = false;
    for (const auto& p : line_points(line))
        if (p == point) on_line = true;
    if (!on_line) throw std::invalid_argument("WeightFunction: point not on the line");
    w.weights.emplace(point, total);
    return w;
}

uint64_t WeightFunction::total() const {
    uint64_t t = 0;
    for (const auto& [p, v] : weights) t += v;
    return t;
}

DecodeCoefficients decode_coeffs(const Line& line, const Vec& lift, uint32_t ell,
                                 const WeightFunction& pi) {
    Factorization f = factorize(line.dir.modulus);
    if (f.factors.size() != 1)
        throw std::invalid_argument("decode_coeffs: line modulus must be a prime power");
    uint32_t p = static_cast<uint32_t>(f.factors[0].p);
    uint32_t k = f.factors[0].k;
    uint64_t pk = f.factors[0].value();
    uint32_t n = static_cast<uint32_t>(line.dir.rep.size());
    if (ell < k) throw std::invalid_argument("decode_coeffs: need ell >= k");
    uint64_t q = 1;
    for (uint32_t i = 0; i < ell; ++i) {
        q *= p;
        if (q > 100'000) throw std::invalid_argument("decode_coeffs: p^ell too large");
    }
    if (lift.size() != n) throw std::invalid_argument("decode_coeffs: lift arity mismatch");
    for (uint32_t i = 0; i < n; ++i)
        if (lift[i] % pk != line.dir.rep[i] || lift[i] >= q)
            throw std::invalid_argument("decode_coeffs: u' must reduce to the line direction");

    // weights keyed by point -> weights by lambda; support must lie on the line
    auto pts = line_points(line);
    std::vector<uint32_t> pi_lambda(pk, 0);
    uint64_t assigned = 0;
    for (const auto& [point, value] : pi.weights) {
        bool found = false;
        for (uint64_t lam = 0; lam < pk; ++lam)
            if (pts[lam] == point) {
                pi_lambda[lam] = value;
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("decode_coeffs: weight supported off the line");
        assigned += value;
    }
    if (assigned < q)
        throw std::invalid_argument("decode_coeffs: total weight below p^ell");
    // trim excess starting from the largest lambda
    uint64_t excess = assigned - q;
    for (uint64_t lam = pk; lam-- > 0 && excess > 0;) {
        uint64_t cut = std::min<uint64_t>(excess, pi_lambda[lam]);
        pi_lambda[lam] -= static_cast<uint32_t>(cut);
        excess -= cut;
    }

    CycloField field{p, k};
    std::vector<std::pair<CycloNumber, uint32_t>> nodes;
    std::vector<uint64_t> node_lambda;
    for (uint64_t lam = 0; lam < pk; ++lam) {
        if (pi_lambda[lam] == 0) continue;
        nodes.emplace_back(field.zeta_pow(static_cast<int64_t>(lam)), pi_lambda[lam]);
        node_lambda.push_back(lam);
    }
    HermiteSystem sys = hermite_coeffs(field, nodes);

    DecodeCoefficients out{p, k, ell, line, lift, pi_lambda, sys.ring, {}};
    std::vector<uint64_t> u_exp(lift.begin(), lift.end());
    for (size_t ni = 0; ni < nodes.size(); ++ni) {
        uint64_t lam = node_lambda[ni];
        uint32_t mult = nodes[ni].second;
        CycloNumber gamma = nodes[ni].first;
        for (uint32_t w = 0; w < mult; ++w) {
            auto b = composition_coeffs(u_exp, w, gamma);
            const ZetaPoly& t = sys.t.at(std::make_pair(ni, w));
            for (const auto& [alpha, coef] : b) {
                if (field.is_zero(coef)) continue;
                // twist by zeta^{<alpha, a>}
                uint64_t dot = 0;
                for (uint32_t i = 0; i < n; ++i) dot += alpha[i] * (line.base[i] % pk);
                CycloNumber twisted =
                    field.mul(coef, field.zeta_pow(static_cast<int64_t>(dot % pk)));
                ZetaPoly contrib = sys.ring.mul_scalar(t, twisted);
                auto key = std::make_pair(lam, alpha);
                auto it = out.c.find(key);
                if (it == out.c.end())
                    out.c.emplace(key, std::move(contrib));
                else
                    it->second = sys.ring.add(it->second, contrib);
            }
        }
    }
    return out;
}

DecodeReport verify_decode(const Line& line, const Vec& lift, uint32_t ell,
                           const WeightFunction& pi,
                           const std::vector<std::vector<uint32_t>>& exponents) {
    DecodeCoefficients dec = decode_coeffs(line, lift, ell, pi);
    CycloField field{dec.p, dec.k};
    uint64_t pk = 1;
    for (uint32_t i = 0; i < dec.k; ++i) pk *= dec.p;
    uint64_t q = 1;
    for (uint32_t i = 0; i < dec.ell; ++i) q *= dec.p;
    uint32_t n = static_cast<uint32_t>(line.dir.rep.size());

    DecodeReport rep;
    rep.pass = true;
    for (const auto& v : exponents) {
        if (v.size() != n) throw std::invalid_argument("verify_decode: exponent arity mismatch");
        ZetaPoly acc = dec.ring.zero();
        for (const auto& [key, coef] : dec.c) {
            uint64_t lam = key.first;
            const auto& alpha = key.second;
            // m_v^{(alpha)}(zeta^{a + lambda u}) =
            //   prod C(v_i, alpha_i) * zeta^{sum x_i (v_i - alpha_i)}
            bool alive = true;
            Int binom = 1;
            uint64_t dot = 0;
            for (uint32_t i = 0; i < n; ++i) {
                if (v[i] < alpha[i]) {
                    alive = false;
                    break;
                }
                binom *= binom_exact(v[i], alpha[i]);
                uint64_t x = (line.base[i] + lam * line.dir.rep[i]) % pk;
                dot += x * (v[i] - alpha[i]);
            }
            if (!alive) continue;
            CycloNumber e = field.mul_rat(field.zeta_pow(static_cast<int64_t>(dot % pk)),
                                          Rat(binom));
            acc = dec.ring.add(acc, dec.ring.mul_scalar(coef, e));
        }
        DecodeReport::Item item;
        item.v = v;
        item.decoded = psi_to_tbar(acc, q);
        uint64_t dot_vu = 0;
        for (uint32_t i = 0; i < n; ++i) dot_vu = (dot_vu + static_cast<uint64_t>(v[i]) * lift[i]) % q;
        FpPoly expect;
        expect.c.assign(q, 0);
        expect.c[dot_vu] = 1;
        item.expected = expect;
        item.ok = (item.decoded == item.expected);
        rep.pass = rep.pass && item.ok;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

} // namespace kzn
