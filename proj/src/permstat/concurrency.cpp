#include <pqeuler/concurrency.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pqeuler
{

unsigned worker_count()
{
    if (const char *env = std::getenv(workers_env_var)) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(std::min(v, 256L));
            }
        } catch (const std::exception &) {
            // fall through to the default
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, const std::function<void(int)> &task)
{
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max(count, 0)));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace pqeuler
