// Copyright 2026 The contam Authors
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

#ifndef CONTAM_PARALLEL_HPP
#define CONTAM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace contam {

/// Worker count: min(hardware threads, CONTAM_THREADS when set). At least 1.
int thread_budget();

/// Runs fn(begin, end) over a partition of [0, count) on up to
/// thread_budget() threads. Each index is visited exactly once; callers get
/// deterministic results by writing to disjoint, pre-sized output slots and
/// reducing in index order afterwards. Exceptions from workers rethrow.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace contam

#endif  // CONTAM_PARALLEL_HPP
