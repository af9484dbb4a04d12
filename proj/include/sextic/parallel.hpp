#ifndef SEXTIC_PARALLEL_HPP
#define SEXTIC_PARALLEL_HPP

#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace sextic {

inline unsigned effective_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("SEXTIC_MONO_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Applies fn to every index in [0, count) across jobs threads and returns
/// the results in index order, so output never depends on scheduling.
template <typename R, typename Fn>
std::vector<R> parallel_map(size_t count, Fn&& fn, unsigned jobs = 0) {
    std::vector<std::optional<R>> slots(count);
    unsigned n = effective_jobs(jobs);
    if (n <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(n);
        for (unsigned w = 0; w < n; ++w) {
            threads.emplace_back([&, w] {
                try {
                    for (size_t i = w; i < count; i += n) slots[i].emplace(fn(i));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<R> results;
    results.reserve(count);
    for (auto& s : slots) results.push_back(std::move(*s));
    return results;
}

} // namespace sextic

#endif
