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
#include "kzn/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "kzn/errors.hpp"
#include "kzn/ring.hpp"

namespace kzn {

uint32_t euler_phi_pk(uint32_t p, uint32_t k) {
    uint64_t v = 1;
    for (uint32_t i = 0; i + 1 < k; ++i) v *= p;
    return static_cast<uint32_t>(v * (p - 1));
}

std::vector<Int> cyclotomic_poly(uint32_t p, uint32_t k) {
    if (k < 1) throw std::invalid_argument("cyclotomic_poly: k must be >= 1");
    uint64_t step = 1;
    for (uint32_t i = 0; i + 1 < k; ++i) step *= p;
    std::vector<Int> c(step * (p - 1) + 1, Int(0));
    for (uint32_t i = 0; i < p; ++i) c[i * step] = 1;
    return c;
}

uint64_t CycloField::pk() const {
    uint64_t v = 1;
    for (uint32_t i = 0; i < k; ++i) v *= p;
    return v;
}

CycloField::Elem CycloField::zero() const {
    return CycloNumber{p, k, std::vector<Rat>(phi(), Rat(0))};
}

CycloField::Elem CycloField::one() const {
    Elem e = zero();
    e.c[0] = 1;
    return e;
}

CycloField::Elem CycloField::from_int(int64_t v) const {
    Elem e = zero();
    e.c[0] = Rat(Int(static_cast<long>(v)));
    return e;
}

CycloField::Elem CycloField::from_rat(const Rat& v) const {
    Elem e = zero();
    e.c[0] = v;
    return e;
}

CycloField::Elem CycloField::reduce(const std::vector<Rat>& raw) const {
    uint64_t order = pk();
    uint32_t ph = phi();
    uint64_t block = order / p; // p^{k-1}
    // fold exponents mod p^k first
    std::vector<Rat> folded(order, Rat(0));
    for (size_t e = 0; e < raw.size(); ++e)
        if (raw[e] != 0) folded[e % order] += raw[e];
    // zeta^{(p-1)p^{k-1} + j} = -sum_{i=0}^{p-2} zeta^{i p^{k-1} + j}
    Elem out = zero();
    for (uint64_t e = 0; e < order; ++e) {
        if (folded[e] == 0) continue;
        if (e < ph) {
            out.c[e] += folded[e];
        } else {
            uint64_t j = e - static_cast<uint64_t>(ph); // j < p^{k-1}
            for (uint32_t i = 0; i + 1 < p; ++i)
                out.c[i * block + j] -= folded[e];
        }
    }
    for (auto& x : out.c) x.canonicalize();
    return out;
}

CycloField::Elem CycloField::zeta_pow(int64_t e) const {
    uint64_t order = pk();
    int64_t m = e % static_cast<int64_t>(order);
    if (m < 0) m += static_cast<int64_t>(order);
    std::vector<Rat> raw(static_cast<size_t>(m) + 1, Rat(0));
    raw[static_cast<size_t>(m)] = 1;
    return reduce(raw);
}

namespace {

void check_match(const CycloNumber& a, const CycloNumber& b) {
    if (a.p != b.p || a.k != b.k)
        throw std::invalid_argument("cyclotomic arithmetic: mismatched (p, k)");
}

} // namespace

CycloField::Elem CycloField::add(const Elem& a, const Elem& b) const {
    check_match(a, b);
    Elem out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

CycloField::Elem CycloField::sub(const Elem& a, const Elem& b) const {
    check_match(a, b);
    Elem out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

CycloField::Elem CycloField::neg(const Elem& a) const {
    Elem out = a;
    for (auto& x : out.c) x = -x;
    return out;
}

CycloField::Elem CycloField::mul(const Elem& a, const Elem& b) const {
    check_match(a, b);
    uint32_t ph = phi();
    std::vector<Rat> raw(2 * static_cast<size_t>(ph), Rat(0));
    for (uint32_t i = 0; i < ph; ++i) {
        if (a.c[i] == 0) continue;
        for (uint32_t j = 0; j < ph; ++j) {
            if (b.c[j] == 0) continue;
            raw[i + j] += a.c[i] * b.c[j];
        }
    }
    return reduce(raw);
}

CycloField::Elem CycloField::mul_rat(const Elem& a, const Rat& r) const {
    Elem out = a;
    for (auto& x : out.c) x *= r;
    return out;
}

bool CycloField::is_zero(const Elem& a) const {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

CycloField::Elem CycloField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::invalid_argument("CycloField::inv: zero");
    uint32_t ph = phi();
    // Solve M x = e_0 where column j of M is a * zeta^j in the power basis.
    std::vector<std::vector<Rat>> m(ph, std::vector<Rat>(ph + 1, Rat(0)));
    Elem col = a;
    for (uint32_t j = 0; j < ph; ++j) {
        for (uint32_t i = 0; i < ph; ++i) m[i][j] = col.c[i];
        if (j + 1 < ph) {
            std::vector<Rat> raw(ph + 1, Rat(0));
            for (uint32_t i = 0; i < ph; ++i) raw[i + 1] = col.c[i];
            col = reduce(raw);
        }
    }
    m[0][ph] = 1;
    // Gauss-Jordan, first-nonzero pivoting
    uint32_t row = 0;
    std::vector<int> pivot_col(ph, -1);
    for (uint32_t c = 0; c < ph && row < ph; ++c) {
        uint32_t sel = row;
        while (sel < ph && m[sel][c] == 0) ++sel;
        if (sel == ph) continue;
        std::swap(m[sel], m[row]);
        Rat pv = m[row][c];
        for (uint32_t j = c; j <= ph; ++j) m[row][j] /= pv;
        for (uint32_t r = 0; r < ph; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (uint32_t j = c; j <= ph; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col[row] = static_cast<int>(c);
        ++row;
    }
    if (row != ph)
        throw std::logic_error("CycloField::inv: multiplication matrix singular");
    Elem out = zero();
    for (uint32_t r = 0; r < ph; ++r) out.c[static_cast<size_t>(pivot_col[r])] = m[r][ph];
    return out;
}

std::string cyclo_str(const CycloNumber& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(a.c[i]);
        if (i >= 1) {
            os << "*zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

uint32_t psi_number(const CycloNumber& x) {
    uint32_t p = x.p;
    // clear all denominators to a single positive integer d
    Int d(1);
    for (const auto& q : x.c) {
        Int den = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = d / g * den;
    }
    if (mpz_divisible_ui_p(d.get_mpz_t(), p))
        throw NotPIntegral("psi: denominator " + d.get_str() + " shares a factor with p=" + std::to_string(p));
    // zeta -> 1: sum the (cleared) coefficients, then divide by d mod p
    Int total(0);
    for (const auto& q : x.c) {
        Rat scaled = q * Rat(d);
        total += scaled.get_num(); // exact integer, den = 1
    }
    uint64_t num_mod = mpz_fdiv_ui(total.get_mpz_t(), p);
    uint64_t den_mod = mpz_fdiv_ui(d.get_mpz_t(), p);
    return static_cast<uint32_t>(mul_mod(num_mod, inv_mod(den_mod, p), p));
}

CycloQuotient CycloQuotient::make(CycloField base, std::vector<CycloNumber> modulus) {
    while (!modulus.empty() && base.is_zero(modulus.back())) modulus.pop_back();
    if (modulus.size() < 2)
        throw std::invalid_argument("CycloQuotient: modulus must be nonconstant");
    if (!(modulus.back() == base.one()))
        throw std::invalid_argument("CycloQuotient: modulus must be monic");
    CycloQuotient q;
    q.base = base;
    q.modulus = std::move(modulus);
    q.cyclic = true;
    CycloNumber minus_one = base.neg(base.one());
    for (size_t i = 0; i + 1 < q.modulus.size(); ++i) {
        const CycloNumber& want = (i == 0) ? minus_one : base.zero();
        if (!(q.modulus[i] == want)) {
            q.cyclic = false;
            break;
        }
    }
    return q;
}

CycloQuotient CycloQuotient::make_cyclic(CycloField base, uint64_t d) {
    std::vector<CycloNumber> m(d + 1, base.zero());
    m[0] = base.neg(base.one());
    m[d] = base.one();
    return make(base, std::move(m));
}

CycloQuotient::Elem CycloQuotient::zero() const {
    return ZetaPoly{std::vector<CycloNumber>(degree(), base.zero())};
}

CycloQuotient::Elem CycloQuotient::one() const {
    Elem e = zero();
    e.c[0] = base.one();
    return e;
}

CycloQuotient::Elem CycloQuotient::monomial(uint64_t e) const {
    size_t d = degree();
    if (cyclic) {
        Elem out = zero();
        out.c[e % d] = base.one();
        return out;
    }
    if (e < d) {
        Elem out = zero();
        out.c[e] = base.one();
        return out;
    }
    std::vector<CycloNumber> raw(e + 1, base.zero());
    raw[e] = base.one();
    return reduce(raw);
}

CycloQuotient::Elem CycloQuotient::scalar(const CycloNumber& v) const {
    Elem out = zero();
    out.c[0] = v;
    return out;
}

CycloQuotient::Elem CycloQuotient::reduce(const std::vector<CycloNumber>& raw) const {
    size_t d = degree();
    Elem out = zero();
    if (cyclic) {
        for (size_t i = 0; i < raw.size(); ++i)
            out.c[i % d] = base.add(out.c[i % d], raw[i]);
        return out;
    }
    std::vector<CycloNumber> rem = raw;
    for (size_t top = rem.size(); top-- > d;) {
        if (base.is_zero(rem[top])) continue;
        CycloNumber lead = rem[top];
        rem[top] = base.zero();
        for (size_t i = 0; i < d; ++i)
            rem[top - d + i] = base.sub(rem[top - d + i], base.mul(lead, modulus[i]));
    }
    for (size_t i = 0; i < d && i < rem.size(); ++i) out.c[i] = rem[i];
    return out;
}

CycloQuotient::Elem CycloQuotient::add(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = base.add(a.c[i], b.c[i]);
    return out;
}

CycloQuotient::Elem CycloQuotient::sub(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = base.sub(a.c[i], b.c[i]);
    return out;
}

CycloQuotient::Elem CycloQuotient::neg(const Elem& a) const {
    Elem out = a;
    for (auto& x : out.c) x = base.neg(x);
    return out;
}

CycloQuotient::Elem CycloQuotient::mul(const Elem& a, const Elem& b) const {
    size_t d = degree();
    std::vector<CycloNumber> raw(2 * d, base.zero());
    for (size_t i = 0; i < d; ++i) {
        if (base.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < d; ++j) {
            if (base.is_zero(b.c[j])) continue;
            raw[i + j] = base.add(raw[i + j], base.mul(a.c[i], b.c[j]));
        }
    }
    return reduce(raw);
}

CycloQuotient::Elem CycloQuotient::mul_scalar(const Elem& a, const CycloNumber& v) const {
    Elem out = a;
    for (auto& x : out.c) x = base.mul(x, v);
    return out;
}

bool CycloQuotient::is_zero(const Elem& a) const {
    for (const auto& x : a.c)
        if (!base.is_zero(x)) return false;
    return true;
}

FpPoly psi_poly(const ZetaPoly& f) {
    FpPoly out;
    out.c.resize(f.c.size(), 0);
    for (size_t i = 0; i < f.c.size(); ++i) out.c[i] = psi_number(f.c[i]);
    return out;
}

FpPoly psi_to_tbar(const ZetaPoly& f, uint64_t d) {
    if (f.c.empty()) return FpPoly{std::vector<uint32_t>(d, 0)};
    Fp fld{f.c[0].p};
    FpPoly out;
    out.c.assign(d, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        uint32_t v = psi_number(f.c[i]);
        size_t j = i % d;
        out.c[j] = fld.add(out.c[j], v);
    }
    return out;
}

} // namespace kzn
