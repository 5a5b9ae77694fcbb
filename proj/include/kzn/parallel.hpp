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
#ifndef KZN_PARALLEL_HPP
#define KZN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace kzn {

// Worker count: KZN_THREADS if set (minimum 1), else hardware concurrency.
size_t thread_count();

// Runs f(i) for i in [0, n), statically chunked over thread_count() threads.
// Callers write results into pre-sized slots indexed by i, so the merged
// outcome is identical to the sequential one.  The first exception thrown
// by any worker is rethrown.
void parallel_for(size_t n, const std::function<void(size_t)>& f);

} // namespace kzn

#endif
