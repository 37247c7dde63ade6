// Copyright 2026 The Immunet Authors.
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

#ifndef IMMUNET_DETAIL_DETERMINISTIC_SUM_HPP
#define IMMUNET_DETAIL_DETERMINISTIC_SUM_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace immunet::detail {

// Reductions over fixed-size chunks: per-chunk partials may be computed by
// any number of threads, but the combine order is the chunk order, so the
// floating-point result is identical for every thread count.
inline constexpr std::size_t kSumChunk = 4096;

inline double chunked_dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
  if (chunks <= 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  }
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kSumChunk;
    const std::size_t hi = lo + kSumChunk < n ? lo + kSumChunk : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i] * y[i];
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

inline double chunked_sum_squares(std::span<const double> x) {
  return chunked_dot(x, x);
}

}  // namespace immunet::detail

#endif  // IMMUNET_DETAIL_DETERMINISTIC_SUM_HPP
