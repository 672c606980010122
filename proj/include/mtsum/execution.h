// Copyright 2026 The mtsum Authors.
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

#ifndef MTSUM_EXECUTION_H_
#define MTSUM_EXECUTION_H_

#include <cstddef>
#include <exception>
#include <vector>

namespace mtsum {

// Selects between the OpenMP kernels and the serial reference loops. The
// serial path is kept so tests and benchmarks can compare the two.
enum class Execution { kSerial, kParallel };

// Runs fn(i) for i in [0, n). Under kParallel the iterations are spread over
// OpenMP threads; the first exception thrown by any iteration (lowest index)
// is rethrown on the calling thread after the loop completes.
template <typename Fn>
void ForEachIndex(std::size_t n, Execution execution, Fn &&fn) {
  if (execution == Execution::kSerial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto &error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace mtsum

#endif  // MTSUM_EXECUTION_H_
