#pragma once

#include <cstdint>
#include <functional>

namespace raagprobe {

// Precedence: explicit request > RAAGPROBE_WORKERS env var > hardware
// concurrency; always at least 1. request <= 0 means "not specified".
int resolve_worker_count(int request);

// Runs fn over [0, total) split into at most `workers` contiguous blocks,
// each on its own thread. fn must be safe on disjoint ranges. Exceptions
// from workers are rethrown (first one wins).
void parallel_for_ranges(std::int64_t total, int workers,
                         const std::function<void(std::int64_t begin, std::int64_t end)>& fn);

}
