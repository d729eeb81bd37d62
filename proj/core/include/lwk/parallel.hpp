/*
 * Copyright 2026 The lwkmeans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LWK_PARALLEL_HPP
#define LWK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace lwk {

/// Worker count: the LWK_THREADS environment variable when set and positive,
/// otherwise hardware concurrency. Thread count affects speed only; every
/// parallel loop here writes results by index.
int thread_count();

/// Runs fn(0) .. fn(count-1) on up to thread_count() workers. Items must be
/// independent; exceptions are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace lwk

#endif  // LWK_PARALLEL_HPP
