#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tsdq {

// Outcome of an exhaustive or sampled identity check.
struct CheckResult {
    bool pass = true;
    std::vector<int> counterexample;
    std::uint64_t checked = 0;
    std::uint64_t total = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    std::string detail;

    double coverage() const { return total == 0 ? 1.0 : static_cast<double>(checked) / static_cast<double>(total); }
    explicit operator bool() const { return pass; }
};

struct Budget {
    std::uint64_t max_identities = 100000000;
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

int worker_count();
void set_worker_count(int n);

// Calls fn(i) for i in [0, n) across workers. Returns the smallest i whose call
// produced a value, with that value. Indices above a found one are skipped.
std::optional<std::pair<std::size_t, std::vector<int>>> parallel_first(
    std::size_t n, const std::function<std::optional<std::vector<int>>(std::size_t)>& fn);

// Runs fn(worker, begin, end) on contiguous blocks of [0, n).
void parallel_blocks(std::size_t n, const std::function<void(int, std::size_t, std::size_t)>& fn);

// TSD_MAX_CELLS, default 1 << 26.
std::uint64_t max_cells();

}  // namespace tsdq
