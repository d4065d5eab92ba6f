#ifndef SCRUTINEER_PARALLEL_HPP
#define SCRUTINEER_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace scrutineer {

/// Worker count used by searches; 1 means run inline.
struct Jobs {
  int count = 1;
};

/// Runs body(begin, end, chunk) over [0, total) split into contiguous chunks,
/// one chunk per worker. Chunk boundaries depend only on `total` and the
/// worker count; callers merge per-chunk results in chunk order.
template <class Body>
void parallel_chunks(std::uint64_t total, int jobs, Body body) {
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1,
                                                                 std::max<std::uint64_t>(total, 1)));
  if (workers <= 1) {
    body(std::uint64_t{0}, total, 0);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, begin, end, w] {
        try {
          body(begin, end, w);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Number of chunks parallel_chunks will use.
inline int chunk_count(std::uint64_t total, int jobs) {
  return static_cast<int>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, std::max<std::uint64_t>(total, 1)));
}

/// Counter-based generator: value(counter) = mix(seed + (counter + 1) * golden).
/// Draws are addressable, so partitioning work never changes the stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace scrutineer

#endif
