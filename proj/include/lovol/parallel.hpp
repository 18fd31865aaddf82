#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace lovol {

// Worker count: LOVOL_THREADS if set, else hardware concurrency, clamped to [1, 64].
int worker_count();

// Runs fn(begin, end) over fixed-size blocks of [0, count). Blocks are
// distributed over workers; block boundaries never depend on the worker
// count, so any per-block result is reproducible.
void parallel_blocks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t)>& fn,
                     std::int64_t block_size = 16384);

// Pairwise (balanced binary tree) summation; deterministic for a fixed
// element order regardless of thread count.
double pairwise_sum(std::span<const double> values);

// Streaming integral reduction: sums term(i) for i in [0, count) with a
// fixed pairwise tree keyed by index, evaluating blocks in parallel.
double parallel_pairwise_sum(std::int64_t count,
                             const std::function<double(std::int64_t)>& term,
                             std::int64_t block_size = 16384);

}  // namespace lovol
