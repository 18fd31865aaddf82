#include "lovol/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lovol {

int worker_count() {
  if (const char* env = std::getenv("LOVOL_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return std::min(n, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp<int>(int(hw == 0 ? 1 : hw), 1, 64);
}

void parallel_blocks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t)>& fn,
                     std::int64_t block_size) {
  if (count <= 0) return;
  const std::int64_t nblocks = (count + block_size - 1) / block_size;
  const int workers = std::min<std::int64_t>(worker_count(), nblocks);

  if (workers <= 1) {
    for (std::int64_t b = 0; b < nblocks; ++b)
      fn(b * block_size, std::min(count, (b + 1) * block_size));
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      try {
        fn(b * block_size, std::min(count, (b + 1) * block_size));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double parallel_pairwise_sum(std::int64_t count,
                             const std::function<double(std::int64_t)>& term,
                             std::int64_t block_size) {
  if (count <= 0) return 0.0;
  const std::int64_t nblocks = (count + block_size - 1) / block_size;
  std::vector<double> partials(std::size_t(nblocks), 0.0);
  parallel_blocks(
      count,
      [&](std::int64_t begin, std::int64_t end) {
        std::vector<double> buf(std::size_t(end - begin));
        for (std::int64_t i = begin; i < end; ++i) buf[std::size_t(i - begin)] = term(i);
        partials[std::size_t(begin / block_size)] = pairwise_sum(buf);
      },
      block_size);
  return pairwise_sum(partials);
}

}  // namespace lovol
