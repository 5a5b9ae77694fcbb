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
#include "kzn/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace kzn {

uint64_t PrimePower::value() const {
    uint64_t v = 1;
    for (uint32_t i = 0; i < k; ++i) v *= p;
    return v;
}

bool Factorization::square_free() const {
    for (const auto& f : factors)
        if (f.k != 1) return false;
    return true;
}

Factorization factorize(uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: N must be >= 2");
    Factorization out;
    out.n = n;
    uint64_t rest = n;
    for (uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        uint32_t k = 0;
        while (rest % d == 0) {
            rest /= d;
            ++k;
        }
        out.factors.push_back({d, k});
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

Zmod make_zmod(uint64_t value, uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("make_zmod: modulus must be positive");
    return Zmod{value % modulus, modulus};
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b != 0) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_unit(uint64_t value, uint64_t modulus) {
    return gcd_u64(value % modulus, modulus) == 1;
}

bool is_unit(const Zmod& x) { return is_unit(x.value, x.modulus); }

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    base %= n;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t n) {
    // extended Euclid on (a, n); signed intermediates
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(n), new_r = static_cast<int64_t>(a % n);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not a unit");
    if (t < 0) t += static_cast<int64_t>(n);
    return static_cast<uint64_t>(t);
}

std::vector<Zmod> crt_split(const Zmod& x, const Factorization& f) {
    if (f.n != x.modulus)
        throw std::invalid_argument("crt_split: factorization does not match modulus");
    std::vector<Zmod> parts;
    parts.reserve(f.factors.size());
    for (const auto& pp : f.factors) {
        uint64_t q = pp.value();
        parts.push_back(Zmod{x.value % q, q});
    }
    return parts;
}

Zmod crt_combine(const std::vector<Zmod>& parts, const Factorization& f) {
    if (parts.size() != f.factors.size())
        throw std::invalid_argument("crt_combine: wrong number of residues");
    uint64_t n = f.n;
    unsigned __int128 acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        uint64_t q = f.factors[i].value();
        if (parts[i].modulus != q)
            throw std::invalid_argument("crt_combine: residue modulus mismatch");
        uint64_t m = n / q;               // co-factor, coprime to q
        uint64_t e = mul_mod(m % n, inv_mod(m % q, q), n);
        acc += static_cast<unsigned __int128>(e) * (parts[i].value % q);
        acc %= n;
    }
    return Zmod{static_cast<uint64_t>(acc), n};
}

std::vector<uint32_t> p_digits(uint64_t x, uint64_t p, uint32_t len) {
    std::vector<uint32_t> digits(len, 0);
    uint64_t rest = x;
    for (uint32_t i = 0; i < len; ++i) {
        digits[i] = static_cast<uint32_t>(rest % p);
        rest /= p;
    }
    if (rest != 0) throw std::invalid_argument("p_digits: x >= p^len");
    return digits;
}

uint64_t from_p_digits(const std::vector<uint32_t>& digits, uint64_t p) {
    uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * p + *it;
    return v;
}

uint32_t p_valuation(uint64_t x, uint64_t p) {
    if (x == 0) throw std::invalid_argument("p_valuation: valuation of 0 is infinite");
    uint32_t t = 0;
    while (x % p == 0) {
        x /= p;
        ++t;
    }
    return t;
}

namespace {

// C(a, b) mod p for digits a, b < p.
uint32_t small_binom_mod(uint64_t a, uint64_t b, uint64_t p) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    uint64_t num = 1, den = 1;
    for (uint64_t i = 0; i < b; ++i) {
        num = mul_mod(num, (a - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    return static_cast<uint32_t>(mul_mod(num, inv_mod(den, p), p));
}

} // namespace

uint32_t lucas_binom(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t r = 1;
    while (a > 0 || b > 0) {
        uint64_t ad = a % p, bd = b % p;
        r = mul_mod(r, small_binom_mod(ad, bd, p), p);
        if (r == 0) return 0;
        a /= p;
        b /= p;
    }
    return static_cast<uint32_t>(r);
}

Int binom_exact(uint64_t a, uint64_t b) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), a, static_cast<unsigned long>(b));
    return out;
}

Rat binom_real(const Rat& x, uint32_t n) {
    Rat out = 1;
    for (uint32_t i = 1; i <= n; ++i) {
        Rat factor = (x - Rat(n) + Rat(i)) / Rat(i);
        out *= factor;
    }
    out.canonicalize();
    return out;
}

} // namespace kzn
