#include "tsdq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace tsdq {

namespace {
std::atomic<int> g_workers{0};
}

int worker_count() {
    int w = g_workers.load();
    if (w > 0) return w;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_worker_count(int n) { g_workers.store(n < 0 ? 0 : n); }

std::optional<std::pair<std::size_t, std::vector<int>>> parallel_first(
    std::size_t n, const std::function<std::optional<std::vector<int>>(std::size_t)>& fn) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n};
    std::mutex mu;
    std::optional<std::pair<std::size_t, std::vector<int>>> result;
    std::exception_ptr error;

    auto work = [&] {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || i >= best.load()) return;
                auto r = fn(i);
                if (!r) continue;
                std::lock_guard<std::mutex> lock(mu);
                if (!result || i < result->first) {
                    result.emplace(i, std::move(*r));
                    best.store(i);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
            best.store(0);
        }
    };

    int w = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < w; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return result;
}

void parallel_blocks(std::size_t n, const std::function<void(int, std::size_t, std::size_t)>& fn) {
    int w = static_cast<int>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
    if (w <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex mu;
    for (int t = 0; t < w; ++t) {
        std::size_t b = n * t / w, e = n * (t + 1) / w;
        pool.emplace_back([&, t, b, e] {
            try {
                fn(t, b, e);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::uint64_t max_cells() {
    if (const char* s = std::getenv("TSD_MAX_CELLS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return std::uint64_t{1} << 26;
}

}  // namespace tsdq
