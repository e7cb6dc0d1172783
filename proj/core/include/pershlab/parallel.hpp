/*
   Copyright 2026 The pershlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <functional>

namespace pershlab {

// Worker count: hardware concurrency, capped by PERSHLAB_THREADS when set.
std::size_t worker_count();

// Calls body(begin, end) on disjoint chunks covering [0, n). Chunk boundaries
// depend only on n and chunk, never on the worker count, so any per-chunk
// output written to disjoint slots is schedule independent. The first
// exception thrown by a worker is rethrown on the calling thread.
void parallel_for_chunks(std::size_t n, std::size_t chunk,
                         const std::function<void(std::size_t, std::size_t)>& body);

} // namespace pershlab
