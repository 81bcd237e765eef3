// Copyright 2026 The wigzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIGZERO_PARALLEL_HPP
#define WIGZERO_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace wigzero {

/// Worker count: hardware concurrency, capped by the WIGZERO_THREADS
/// environment variable when it is set to a positive integer.
unsigned worker_count();

/// Runs task(i) for i in [0, count) on up to worker_count() threads. Each
/// index is visited exactly once; tasks must write only to their own slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

/// Maps task over [0, count) and returns the results in index order, so the
/// output never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& task) {
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = task(i); });
    return out;
}

}  // namespace wigzero

#endif  // WIGZERO_PARALLEL_HPP
