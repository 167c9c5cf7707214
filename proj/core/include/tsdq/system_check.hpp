#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <random>
#include <vector>

#include "tsdq/parallel.hpp"

namespace tsdq::detail {

// Checks holds(i,j,k,x,y,z,u,v) for x in X_i, y,z in X_j, u,v in X_k over all
// index triples. Exhaustive when within budget; otherwise a seeded sample of
// budget.max_identities tuples, weighted by the size of each index triple.
template <class Holds>
CheckResult check_system_identity(const std::vector<int>& sizes, const Budget& budget, const Holds& holds,
                                  const char* what) {
    const int q = static_cast<int>(sizes.size());
    CheckResult r;
    r.seed = budget.seed;
    auto count = [&](int i, int j, int k) {
        return static_cast<std::uint64_t>(sizes[i]) * sizes[j] * sizes[j] * sizes[k] * sizes[k];
    };
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < q; ++k) r.total += count(i, j, k);

    if (budget.exhaustive || r.total <= budget.max_identities) {
        std::vector<std::array<int, 4>> units;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                for (int k = 0; k < q; ++k)
                    for (int x = 0; x < sizes[i]; ++x) units.push_back({i, j, k, x});
        auto found = parallel_first(units.size(), [&](std::size_t idx) -> std::optional<std::vector<int>> {
            auto [i, j, k, x] = units[idx];
            const int mj = sizes[j], mk = sizes[k];
            for (int y = 0; y < mj; ++y)
                for (int z = 0; z < mj; ++z)
                    for (int u = 0; u < mk; ++u)
                        for (int v = 0; v < mk; ++v)
                            if (!holds(i, j, k, x, y, z, u, v)) return std::vector<int>{i, j, k, x, y, z, u, v};
            return std::nullopt;
        });
        if (found) {
            r.pass = false;
            r.counterexample = found->second;
            r.detail = what;
        } else {
            r.checked = r.total;
        }
        return r;
    }

    r.sampled = true;
    std::vector<std::uint64_t> cumulative;
    std::vector<std::array<int, 3>> triples;
    std::uint64_t acc = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < q; ++k) {
                acc += count(i, j, k);
                cumulative.push_back(acc);
                triples.push_back({i, j, k});
            }
    const std::uint64_t samples = budget.max_identities;
    const std::uint64_t block = std::uint64_t{1} << 20;
    const std::uint64_t nblocks = (samples + block - 1) / block;
    std::mutex mu;
    std::vector<int> best;
    parallel_blocks(nblocks, [&](int, std::size_t b0, std::size_t b1) {
        for (std::size_t b = b0; b < b1; ++b) {
            std::mt19937_64 rng(budget.seed * 0x9E3779B97F4A7C15ull + b);
            const std::uint64_t n = std::min(block, samples - b * block);
            std::vector<int> local;
            for (std::uint64_t s = 0; s < n; ++s) {
                const std::uint64_t pick = rng() % acc;
                const auto t = std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
                const auto [i, j, k] = triples[t];
                std::uint64_t w1 = rng(), w2 = rng();
                auto draw = [](std::uint64_t& w, int bound) {
                    int v = static_cast<int>(((w & 0xFFFF) * static_cast<std::uint64_t>(bound)) >> 16);
                    w >>= 16;
                    return v;
                };
                const int x = draw(w1, sizes[i]), y = draw(w1, sizes[j]), z = draw(w1, sizes[j]);
                const int u = draw(w2, sizes[k]), v = draw(w2, sizes[k]);
                if (!holds(i, j, k, x, y, z, u, v)) {
                    std::vector<int> ce{i, j, k, x, y, z, u, v};
                    if (local.empty() || ce < local) local = std::move(ce);
                }
            }
            std::lock_guard<std::mutex> lock(mu);
            if (!local.empty() && (best.empty() || local < best)) best = local;
        }
    });
    r.checked = samples;
    if (!best.empty()) {
        r.pass = false;
        r.counterexample = best;
        r.detail = std::string(what) + " (sampled)";
    }
    return r;
}

}  // namespace tsdq::detail
