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
#include "kzn/fp.hpp"

#include <sstream>
#include <stdexcept>

#include "kzn/ring.hpp"

namespace kzn {

Fp::Elem Fp::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("Fp::inv: zero");
    return static_cast<Elem>(inv_mod(a, p));
}

int fp_poly_degree(const FpPoly& a) {
    for (size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != 0) return static_cast<int>(i);
    return -1;
}

FpPoly fp_poly_trim(FpPoly a) {
    size_t n = a.c.size();
    while (n > 0 && a.c[n - 1] == 0) --n;
    a.c.resize(n);
    return a;
}

bool fp_poly_is_zero(const FpPoly& a) { return fp_poly_degree(a) < 0; }

FpPoly fp_poly_add(const Fp& f, const FpPoly& a, const FpPoly& b) {
    FpPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        uint32_t x = i < a.c.size() ? a.c[i] : 0;
        uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = f.add(x, y);
    }
    return out;
}

FpPoly fp_poly_sub(const Fp& f, const FpPoly& a, const FpPoly& b) {
    FpPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        uint32_t x = i < a.c.size() ? a.c[i] : 0;
        uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = f.sub(x, y);
    }
    return out;
}

FpPoly fp_poly_mul(const Fp& f, const FpPoly& a, const FpPoly& b) {
    int da = fp_poly_degree(a), db = fp_poly_degree(b);
    if (da < 0 || db < 0) return FpPoly{};
    FpPoly out;
    out.c.assign(static_cast<size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j <= db; ++j)
            out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
    }
    return out;
}

std::pair<FpPoly, FpPoly> fp_poly_divrem(const Fp& f, const FpPoly& a, const FpPoly& b) {
    int db = fp_poly_degree(b);
    if (db < 0) throw std::invalid_argument("fp_poly_divrem: division by zero");
    if (b.c[db] != 1) throw std::invalid_argument("fp_poly_divrem: divisor must be monic");
    FpPoly rem = fp_poly_trim(a);
    int dr = fp_poly_degree(rem);
    if (dr < db) return {FpPoly{}, rem};
    FpPoly quot;
    quot.c.assign(static_cast<size_t>(dr - db + 1), 0);
    while (dr >= db) {
        uint32_t coef = rem.c[dr];
        quot.c[dr - db] = coef;
        for (int i = 0; i <= db; ++i)
            rem.c[dr - db + i] = f.sub(rem.c[dr - db + i], f.mul(coef, b.c[i]));
        rem = fp_poly_trim(rem);
        dr = fp_poly_degree(rem);
    }
    return {quot, rem};
}

FpPoly fp_poly_shift_one(const Fp& f, const FpPoly& a) {
    // a(1 + w) accumulated row by row of Pascal's triangle mod p
    FpPoly out;
    out.c.assign(a.c.size(), 0);
    for (size_t j = 0; j < a.c.size(); ++j) {
        if (a.c[j] == 0) continue;
        for (size_t i = 0; i <= j; ++i) {
            uint32_t bin = lucas_binom(j, i, f.p);
            out.c[i] = f.add(out.c[i], f.mul(a.c[j], bin));
        }
    }
    return out;
}

std::string fp_poly_str(const FpPoly& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i >= 1) {
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

FpQuotient FpQuotient::make(Fp field, FpPoly modulus) {
    modulus = fp_poly_trim(std::move(modulus));
    int d = fp_poly_degree(modulus);
    if (d < 1) throw std::invalid_argument("FpQuotient: modulus must be nonconstant");
    if (modulus.c[static_cast<size_t>(d)] != 1)
        throw std::invalid_argument("FpQuotient: modulus must be monic");
    FpQuotient q;
    q.field = field;
    q.modulus = std::move(modulus);
    // z^d - 1 gets the exponent-folding fast path
    q.cyclic = true;
    for (size_t i = 0; i + 1 < q.modulus.c.size(); ++i) {
        uint32_t want = (i == 0) ? field.neg(1 % field.p) : 0;
        if (q.modulus.c[i] != want) {
            q.cyclic = false;
            break;
        }
    }
    return q;
}

FpQuotient FpQuotient::make_cyclic(uint32_t p, uint64_t d) {
    if (d < 1) throw std::invalid_argument("FpQuotient: degree must be >= 1");
    Fp f{p};
    FpPoly m;
    m.c.assign(d + 1, 0);
    m.c[0] = f.neg(1 % p);
    m.c[d] = 1;
    return make(f, std::move(m));
}

FpQuotient::Elem FpQuotient::one() const {
    Elem e = zero();
    e.c[0] = 1 % field.p;
    return e;
}

FpQuotient::Elem FpQuotient::monomial(uint64_t e) const {
    Elem out = zero();
    size_t d = degree();
    if (cyclic) {
        out.c[e % d] = 1 % field.p;
        return out;
    }
    if (e >= d) {
        FpPoly raw;
        raw.c.assign(e + 1, 0);
        raw.c[e] = 1 % field.p;
        return reduce(raw);
    }
    out.c[e] = 1 % field.p;
    return out;
}

FpQuotient::Elem FpQuotient::from_int(int64_t v) const {
    Elem e = zero();
    e.c[0] = field.from_int(v);
    return e;
}

FpQuotient::Elem FpQuotient::reduce(const FpPoly& a) const {
    size_t d = degree();
    Elem out = zero();
    if (cyclic) {
        for (size_t i = 0; i < a.c.size(); ++i)
            out.c[i % d] = field.add(out.c[i % d], a.c[i]);
        return out;
    }
    FpPoly rem = fp_poly_divrem(field, a, modulus).second;
    for (size_t i = 0; i < rem.c.size(); ++i) out.c[i] = rem.c[i];
    return out;
}

FpQuotient::Elem FpQuotient::add(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = field.add(a.c[i], b.c[i]);
    return out;
}

FpQuotient::Elem FpQuotient::sub(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = field.sub(a.c[i], b.c[i]);
    return out;
}

FpQuotient::Elem FpQuotient::neg(const Elem& a) const {
    Elem out = zero();
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = field.neg(a.c[i]);
    return out;
}

FpQuotient::Elem FpQuotient::mul(const Elem& a, const Elem& b) const {
    size_t d = degree();
    if (cyclic) {
        Elem out = zero();
        for (size_t i = 0; i < d; ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < d; ++j) {
                size_t k = i + j;
                if (k >= d) k -= d;
                out.c[k] = field.add(out.c[k], field.mul(a.c[i], b.c[j]));
            }
        }
        return out;
    }
    return reduce(fp_poly_mul(field, a, b));
}

bool FpQuotient::is_zero(const Elem& a) const { return fp_poly_is_zero(a); }

} // namespace kzn
