// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Data-parallel loop kernels. Every kernel has a serial reference with the
// same signature; results are written by index, so the two produce
// bit-identical output and all reductions happen afterwards in index order.

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skyshield::kernels {

// Cap on OpenMP threads; 0 means the runtime default.
struct Parallelism {
    int workers = 0;
};

namespace serial {

// out[i] = f(i) for i in [0, n)
template <typename T, typename F>
std::vector<T> fill(std::size_t n, F&& f)
{
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = f(i);
    return out;
}

// Row-major [n x width] block; f(i, row_ptr) writes row i.
template <typename F>
std::vector<double> fill_rows(std::size_t n, std::size_t width, F&& f)
{
    std::vector<double> out(n * width);
    for (std::size_t i = 0; i < n; ++i)
        f(i, out.data() + i * width);
    return out;
}

} // namespace serial

namespace omp {

template <typename T, typename F>
std::vector<T> fill(std::size_t n, F&& f, Parallelism par = {})
{
    std::vector<T> out(n);
    const auto count = static_cast<std::int64_t>(n);
#ifdef _OPENMP
    const int threads = par.workers > 0 ? par.workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    (void)par;
    return out;
}

template <typename F>
std::vector<double> fill_rows(std::size_t n, std::size_t width, F&& f, Parallelism par = {})
{
    std::vector<double> out(n * width);
    const auto count = static_cast<std::int64_t>(n);
#ifdef _OPENMP
    const int threads = par.workers > 0 ? par.workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < count; ++i)
        f(static_cast<std::size_t>(i), out.data() + static_cast<std::size_t>(i) * width);
    (void)par;
    return out;
}

} // namespace omp

inline int max_workers() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace skyshield::kernels
