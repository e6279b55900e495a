// Copyright 2026 The tweetpiece Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace tweetpiece {

// Worker cap: TWEETPIECE_THREADS when set (minimum 1), otherwise the
// hardware concurrency.
unsigned worker_count();

// Number of fixed-size chunks covering [0, n).
std::size_t chunk_count(std::size_t n, std::size_t chunk_size);

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size
// chunks. Chunk boundaries depend only on n and chunk_size, never on the
// worker count, so per-chunk results combined in chunk order are
// reproducible regardless of scheduling.
void parallel_chunks(
    std::size_t n, std::size_t chunk_size,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace tweetpiece
