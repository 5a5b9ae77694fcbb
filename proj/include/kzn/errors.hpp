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
#ifndef KZN_ERRORS_HPP
#define KZN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzn {

// Raised when a cyclotomic value fails the p-integrality test (its reduced
// coefficient denominators share a factor with p) and so cannot be pushed
// through the quotient map to F_p.  A conservative test: a raise means the
// value could not be certified integral, never that a wrong answer was
// produced.
class NotPIntegral : public std::runtime_error {
public:
    explicit NotPIntegral(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a requested computation exceeds the configured size budget
// (grids, matrices or search spaces too large for exact desk-scale work).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kzn

#endif
