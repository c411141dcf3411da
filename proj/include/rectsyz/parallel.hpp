#ifndef RECTSYZ_PARALLEL_HPP
#define RECTSYZ_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rectsyz {

/// Runs fn(index) for index = 0..count-1 across the given number of worker
/// threads (0 picks the hardware concurrency). fn must write its result into
/// per-index storage; merging in index order keeps the outcome deterministic.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    unsigned int workers = threads > 0 ? static_cast<unsigned int>(threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned int>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);  // drain remaining work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace rectsyz

#endif
