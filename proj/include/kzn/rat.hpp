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
#ifndef KZN_RAT_HPP
#define KZN_RAT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kzn {

// All certified quantities are exact: arbitrary-precision integers and
// canonical rationals (gcd-reduced, positive denominator).  GMP keeps mpq
// values canonical through arithmetic, so equality is structural.
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

// Ceiling / floor on exact rationals, never through floating point.
Int rat_ceil(const Rat& x);
Int rat_floor(const Rat& x);

// Parses "a" or "a/b" (decimal integers, optional leading '-').
Rat parse_rat(const std::string& s);

// "num/den" (or just "num" for integers).
std::string rat_str(const Rat& x);

// Decimal rendering with the given number of significant digits, for
// display next to the exact fraction.
std::string rat_decimal(const Rat& x, unsigned sig_digits = 6);

} // namespace kzn

#endif
