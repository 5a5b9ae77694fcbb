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
#include "kzn/rat.hpp"

#include <sstream>
#include <stdexcept>

namespace kzn {

Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
    out.canonicalize();
    return out;
}

Int rat_ceil(const Rat& x) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return out;
}

Int rat_floor(const Rat& x) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return out;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r{Int(s)};
            return r;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rat_decimal(const Rat& x, unsigned sig_digits) {
    if (x == 0) return "0";
    mpf_class f(0, 64 + 4 * sig_digits);
    f = x;
    std::ostringstream os;
    os.precision(sig_digits);
    os << f;
    return os.str();
}

} // namespace kzn
