#pragma once

#include <cstddef>
#include <vector>

namespace qcs {

// Execution policy for the data-parallel kernels. `serial` is the reference
// path; `parallel` runs the same loops under OpenMP. Both produce bit-identical
// results: elementwise kernels touch disjoint indices, and reductions use a
// fixed block decomposition that does not depend on the thread count.
enum class Exec { serial, parallel };

namespace detail {
// below this many elements the parallel policy falls back to the serial loop
inline constexpr std::size_t parallel_grain = std::size_t{1} << 14;
// fixed reduction block, independent of policy and thread count
inline constexpr std::size_t sum_block = std::size_t{1} << 12;
}  // namespace detail

template <class F>
void for_each_index(std::size_t count, Exec exec, F&& f) {
    if (exec == Exec::parallel && count >= detail::parallel_grain) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            f(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            f(i);
        }
    }
}

// Deterministic reduction: each fixed-size block is accumulated left to right,
// then the block partials are combined in index order.
template <class F>
double indexed_sum(std::size_t count, Exec exec, F&& f) {
    if (count <= detail::sum_block) {
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) acc += f(i);
        return acc;
    }
    const std::size_t nblocks = (count + detail::sum_block - 1) / detail::sum_block;
    std::vector<double> partial(nblocks, 0.0);
    const auto block_sum = [&](std::size_t b) {
        const std::size_t lo = b * detail::sum_block;
        const std::size_t hi = lo + detail::sum_block < count ? lo + detail::sum_block : count;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        partial[b] = acc;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
            block_sum(static_cast<std::size_t>(b));
        }
    } else {
        for (std::size_t b = 0; b < nblocks; ++b) block_sum(b);
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace qcs
