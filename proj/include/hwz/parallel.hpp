// Copyright 2026 The HWZ Authors. All Rights Reserved.
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

#ifndef HWZ_PARALLEL_HPP_
#define HWZ_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace hwz {

// Worker cap: HWZ_THREADS when set to a positive value, otherwise the
// hardware concurrency (0 or unset means implementation default).
int thread_budget();

// Runs fn(0) ... fn(n-1) on up to thread_budget() workers. Callers keep
// determinism by writing results into per-index slots; exceptions from fn
// are rethrown on the calling thread.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace hwz

#endif  // HWZ_PARALLEL_HPP_
