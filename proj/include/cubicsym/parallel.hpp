#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace cubicsym {

/// Worker count: CUBICSYM_THREADS if set, else the hardware concurrency.
inline unsigned default_concurrency() {
  if (const char* env = std::getenv("CUBICSYM_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(0..count-1) on a small pool; results are stored by index so the output
/// does not depend on scheduling. The lowest-index exception is rethrown.
template <class F>
auto parallel_map(std::size_t count, F fn, unsigned threads = default_concurrency())
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        slots[k].emplace(fn(k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Seed of the k-th independent stream derived from a base seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace cubicsym
