#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qeh::detail {

// Calls f(i) for i in [from, to], highest index first, on up to `jobs` threads.
// The first exception thrown is rethrown after all workers finish.
template <class F>
void parallel_for(int from, int to, int jobs, F&& f) {
    if (to < from) return;
    const int nt = std::max(1, std::min(jobs, to - from + 1));
    if (nt == 1) {
        for (int i = to; i >= from; --i) f(i);
        return;
    }
    std::atomic<int> next{to};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int k = 0; k < nt; ++k)
        pool.emplace_back([&] {
            for (int i = next--; i >= from; i = next--) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace qeh::detail
