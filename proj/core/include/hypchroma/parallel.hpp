#pragma once

// Shard runner used wherever work splits into independent pieces. Results
// never depend on the thread count: callers index output by shard.

#include <cstdint>
#include <functional>
#include <optional>

namespace hypchroma {

/// Worker count: `requested` when given, else HYPCHROMA_THREADS, else the
/// machine's hardware concurrency (at least 1). Throws invalid-input for
/// values < 1 or an unparsable environment variable.
int resolve_threads(std::optional<int> requested = std::nullopt);

/// Default thread cap for library calls that take no explicit count.
int default_threads();
void set_default_threads(int threads);

/// Calls fn(shard) for shard in [0, count) using up to `threads` workers.
/// The first exception thrown by any shard is rethrown after all workers stop.
void run_shards(int count, int threads, const std::function<void(int)>& fn);

/// Independent 64-bit seed for shard `index` of a run seeded with `seed`.
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hypchroma
