#ifndef PQEULER_CONCURRENCY_HPP
#define PQEULER_CONCURRENCY_HPP

#include <functional>

namespace pqeuler
{

// Name of the environment variable that caps the number of worker threads.
inline constexpr const char *workers_env_var = "PQEULER_WORKERS";

// PQEULER_WORKERS if set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned worker_count();

// Runs task(i) for i in [0, count) on up to worker_count() threads.
void parallel_for(int count, const std::function<void(int)> &task);

} // namespace pqeuler

#endif
