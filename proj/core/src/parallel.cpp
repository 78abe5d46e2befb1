#include "hypchroma/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hypchroma/errors.hpp"

namespace hypchroma {

namespace {

std::atomic<int> g_default_threads{0};

int parse_positive(std::string_view text, const char* source) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    fail(ErrorKind::InvalidInput, std::string(source) + " must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

int resolve_threads(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) fail(ErrorKind::InvalidInput, "thread count must be >= 1");
    return *requested;
  }
  if (const char* env = std::getenv("HYPCHROMA_THREADS"); env && *env) return parse_positive(env, "HYPCHROMA_THREADS");
  return std::max(1u, std::thread::hardware_concurrency());
}

int default_threads() {
  const int t = g_default_threads.load();
  return t > 0 ? t : resolve_threads();
}

void set_default_threads(int threads) {
  if (threads < 1) fail(ErrorKind::InvalidInput, "thread count must be >= 1");
  g_default_threads.store(threads);
}

void run_shards(int count, int threads, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const int workers = std::clamp(threads, 1, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      if (stop.load()) return;
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hypchroma
