#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sefib::detail {

/// Runs fn(block_index, begin, end) over contiguous blocks of [0, total). Blocks are claimed
/// dynamically but callers key results by block index, so merges are order-deterministic.
/// The first exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void for_each_block(std::size_t total, std::size_t block_size, unsigned workers, Fn&& fn) {
  if (total == 0) return;
  block_size = std::max<std::size_t>(block_size, 1);
  const std::size_t blocks = (total + block_size - 1) / block_size;
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      try {
        fn(b, b * block_size, std::min(total, (b + 1) * block_size));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(blocks);
        return;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace sefib::detail
