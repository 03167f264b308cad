#pragma once

// Chunked parallel map with an input-ordered fold.
//
// The chunk layout depends only on the range length and chunk size, each
// chunk is reduced sequentially, and chunk results are combined in chunk
// order on the calling thread. Floating-point results are therefore
// bit-identical for any worker count.

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ecrep {

/// Worker count used when callers pass 0.
unsigned default_workers();

template <class T, class ChunkFn, class CombineFn>
T ordered_reduce(std::size_t count, std::size_t chunk_size, unsigned workers, T init, ChunkFn&& chunk_fn,
                 CombineFn&& combine) {
  if (count == 0) return init;
  chunk_size = std::max<std::size_t>(chunk_size, 1);
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));

  std::vector<std::optional<T>> partial(chunks);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(count, begin + chunk_size);
    partial[c].emplace(chunk_fn(begin, end));
  };

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) run_chunk(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(chunks);
        }
        mpfr_free_cache();
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  T acc = std::move(init);
  for (auto& value : partial) combine(acc, std::move(*value));
  return acc;
}

}  // namespace ecrep
