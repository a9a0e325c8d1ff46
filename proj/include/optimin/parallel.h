// Copyright 2026 The Optimin Authors.
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

#ifndef OPTIMIN_PARALLEL_H_
#define OPTIMIN_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace optimin {

// Runs body(i) for every i in [0, count) on up to `jobs` threads. Work is
// split into contiguous blocks; callers write results into preallocated
// slots so the outcome never depends on `jobs`. The first exception thrown
// by any worker is rethrown on the calling thread.
void ParallelFor(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& body);

}  // namespace optimin

#endif  // OPTIMIN_PARALLEL_H_
