#include "cobord/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace cobord {

namespace {
std::atomic<unsigned> g_threads{1};
}

unsigned thread_count() { return g_threads.load(); }

void set_thread_count(unsigned n) {
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    g_threads.store(n);
}

void parallel_for_chunks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
    if (count == 0) return;
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        body(0, count, 0);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::exception_ptr error;
    std::atomic_flag error_set = ATOMIC_FLAG_INIT;
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, static_cast<unsigned>(w));
            } catch (...) {
                if (!error_set.test_and_set()) error = std::current_exception();
            }
        });
    }
    try {
        body(0, std::min(count, chunk), 0);
    } catch (...) {
        if (!error_set.test_and_set()) error = std::current_exception();
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace cobord
