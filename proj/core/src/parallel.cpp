#include "raagprobe/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace raagprobe {

int resolve_worker_count(int request) {
    if (request > 0) return request;
    if (const char* env = std::getenv("RAAGPROBE_WORKERS")) {
        try {
            const int parsed = std::stoi(env);
            if (parsed > 0) return parsed;
        } catch (const std::exception&) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_ranges(std::int64_t total, int workers,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (total <= 0) return;
    if (workers > total) workers = static_cast<int>(total);
    if (workers <= 1) {
        fn(0, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::int64_t base = total / workers;
    const std::int64_t extra = total % workers;
    std::int64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t len = base + (w < extra ? 1 : 0);
        const std::int64_t end = begin + len;
        threads.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        begin = end;
    }
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}
