#include "tsdq/statesum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "tsdq/parallel.hpp"

namespace tsdq {

namespace {

SystemCocycle lift_single(const TernaryStructure& s, const Cochain2& psi) {
    if (psi.structure.m != s.m) throw std::invalid_argument("cocycle lives on a different structure");
    SystemCocycle a(single_system(s), psi.coeffs);
    a.values[0] = psi.values;
    return a;
}

SystemCocycle weightless(const TernaryStructure& s) { return SystemCocycle(single_system(s), AbelianGroup()); }

// Propagation over a compatible system; a single structure is the q = 1 case.
class Walker {
public:
    Walker(const SystemCocycle& a, const StateSumOptions& opt) : a_(a), c_(a.system), opt_(opt) {
        const int q = c_.q();
        linv_.resize(static_cast<std::size_t>(q) * q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                const int mi = c_.sizes[i], mj = c_.sizes[j];
                auto& t = linv_[i * q + j];
                t.assign(static_cast<std::size_t>(mi) * mj * mj, -1);
                for (int y = 0; y < mj; ++y)
                    for (int z = 0; z < mj; ++z)
                        for (int x = 0; x < mi; ++x) {
                            auto& cell = t[(static_cast<std::size_t>(c_.T(i, j, x, y, z)) * mj + y) * mj + z];
                            if (cell < 0) cell = x;
                        }
            }
        theta_.resize(q);
        theta_inv_.resize(q);
        for (int i = 0; i < q; ++i) {
            const int mi = c_.sizes[i];
            theta_[i].resize(static_cast<std::size_t>(mi) * mi);
            theta_inv_[i].assign(static_cast<std::size_t>(mi) * mi, -1);
            for (int x = 0; x < mi; ++x)
                for (int y = 0; y < mi; ++y) {
                    const int u = c_.T(i, i, x, x, y), v = c_.T(i, i, y, x, y);
                    theta_[i][x * mi + y] = u * mi + v;
                    auto& cell = theta_inv_[i][u * mi + v];
                    cell = cell < 0 ? x * mi + y : -2;
                }
            theta_ok_.push_back(std::none_of(theta_inv_[i].begin(), theta_inv_[i].end(), [](int v) { return v < 0; }));
        }
    }

    int rank() const { return static_cast<int>(a_.rank()); }

    // Runs b from `top`; adds weights into acc[component * 2 * rank + ...].
    // Returns false when the closure condition fails.
    bool run(const BraidSequence& b, const std::vector<int>& carrier_of_strand, const std::vector<int>& comp,
             const std::vector<ColorPair>& top, std::vector<std::int64_t>* acc, Coloring* record) const {
        const int r = rank();
        std::vector<ColorPair> col = top;
        std::vector<int> at(b.strands);
        std::iota(at.begin(), at.end(), 0);
        auto add = [&](int strand, int ci, int cj, int x, int y, int z, int sign, int half) {
            if (!acc || r == 0) return;
            const std::int64_t* w = a_.at(ci, cj, x, y, z);
            std::int64_t* dst = acc->data() + (static_cast<std::size_t>(comp[strand]) * 2 + half) * r;
            for (int k = 0; k < r; ++k) dst[k] = detail::add_checked(dst[k], sign * w[k]);
        };
        for (std::size_t n = 0; n < b.items.size(); ++n) {
            const auto& it = b.items[n];
            ColoringStep step;
            if (record) {
                step.item = n;
                step.before = col;
            }
            if (it.kind == BraidItem::Kind::Twist) {
                const int p = it.index - 1, s = at[p], ci = carrier_of_strand[s], mi = c_.sizes[ci];
                for (int k = 0; k < std::abs(it.power); ++k) {
                    auto [x, y] = col[p];
                    if (it.power > 0) {
                        add(s, ci, ci, x, x, y, 1, 0);
                        add(s, ci, ci, y, x, y, 1, 1);
                        const int t = theta_[ci][x * mi + y];
                        col[p] = {t / mi, t % mi};
                    } else {
                        const int t = theta_inv_[ci][x * mi + y];
                        if (t < 0 || !twist_bijective(ci))
                            throw std::domain_error("twist is not invertible on this structure");
                        const int u = t / mi, v = t % mi;
                        add(s, ci, ci, u, u, v, -1, 0);
                        add(s, ci, ci, v, u, v, -1, 1);
                        col[p] = {u, v};
                    }
                }
                if (record) {
                    step.twist = true;
                    step.sign = it.power > 0 ? 1 : -1;
                    step.under = step.over = step.before[p];
                }
            } else {
                const int p = it.index - 1;
                if (it.power > 0) {
                    const int su = at[p], so = at[p + 1];
                    const int ci = carrier_of_strand[su], cj = carrier_of_strand[so];
                    auto [x1, x2] = col[p];
                    auto [y1, y2] = col[p + 1];
                    add(su, ci, cj, x1, y1, y2, 1, 0);
                    add(su, ci, cj, x2, y1, y2, 1, 1);
                    col[p] = {y1, y2};
                    col[p + 1] = {c_.T(ci, cj, x1, y1, y2), c_.T(ci, cj, x2, y1, y2)};
                    if (record) {
                        step.under = {x1, x2};
                        step.over = {y1, y2};
                    }
                } else {
                    const int so = at[p], su = at[p + 1];
                    const int ci = carrier_of_strand[su], cj = carrier_of_strand[so];
                    auto [a1, a2] = col[p];
                    auto [p1, p2] = col[p + 1];
                    int u1, u2;
                    if (opt_.forward_negative) {
                        add(su, ci, cj, p1, a1, a2, -1, 0);
                        add(su, ci, cj, p2, a1, a2, -1, 1);
                        u1 = c_.T(ci, cj, p1, a1, a2);
                        u2 = c_.T(ci, cj, p2, a1, a2);
                    } else {
                        u1 = left_inverse(ci, cj, p1, a1, a2);
                        u2 = left_inverse(ci, cj, p2, a1, a2);
                        add(su, ci, cj, u1, a1, a2, -1, 0);
                        add(su, ci, cj, u2, a1, a2, -1, 1);
                    }
                    col[p] = {u1, u2};
                    col[p + 1] = {a1, a2};
                    if (record) {
                        step.under = {p1, p2};
                        step.over = {a1, a2};
                    }
                }
                std::swap(at[p], at[p + 1]);
                if (record) step.sign = it.power;
            }
            if (record) {
                step.after = col;
                record->steps.push_back(std::move(step));
            }
        }
        return col == top;
    }

private:
    bool twist_bijective(int i) const { return theta_ok_[i]; }

    int left_inverse(int i, int j, int p, int y, int z) const {
        const int mj = c_.sizes[j];
        const int v = linv_[i * c_.q() + j][(static_cast<std::size_t>(p) * mj + y) * mj + z];
        if (v < 0) throw std::domain_error("structure is not a rack: no left inverse");
        return v;
    }

    const SystemCocycle& a_;
    const CompatibleSystem& c_;
    StateSumOptions opt_;
    std::vector<std::vector<int>> linv_;
    std::vector<std::vector<int>> theta_, theta_inv_;
    std::vector<bool> theta_ok_;
};

std::vector<ColorPair> decode_top(std::uint64_t idx, const std::vector<int>& sizes) {
    std::vector<ColorPair> top(sizes.size());
    for (std::size_t k = sizes.size(); k-- > 0;) {
        const std::uint64_t m = static_cast<std::uint64_t>(sizes[k]);
        top[k].second = static_cast<int>(idx % m);
        idx /= m;
        top[k].first = static_cast<int>(idx % m);
        idx /= m;
    }
    return top;
}

std::uint64_t top_count(const std::vector<int>& sizes) {
    std::uint64_t n = 1;
    for (int m : sizes) {
        n *= static_cast<std::uint64_t>(m) * m;
        if (n > max_cells()) throw std::length_error("too many top colorings for the cell limit");
    }
    return n;
}

InvariantValue sum_invariant(const BraidSequence& b, const SystemCocycle& a, const std::vector<int>& assignment,
                             const StateSumOptions& opt) {
    if (static_cast<int>(assignment.size()) != b.strands) throw std::invalid_argument("assignment size mismatch");
    for (int x : assignment)
        if (x < 0 || x >= a.system.q()) throw std::invalid_argument("assignment index out of range");
    const ClosureInfo info = closure_components(b);
    const int t = static_cast<int>(info.components.size());
    const int r = static_cast<int>(a.rank());
    InvariantValue out;
    out.components = t;
    out.value = GroupRingElement(AbelianGroup::power(a.coeffs, 2 * t));
    for (int s = 0; s < b.strands; ++s)
        if (assignment[s] != assignment[info.permutation[s]]) return out;

    std::vector<int> sizes(b.strands);
    for (int s = 0; s < b.strands; ++s) sizes[s] = a.system.sizes[assignment[s]];
    const std::uint64_t total = top_count(sizes);
    const Walker walker(a, opt);

    const int workers = std::max(1, worker_count());
    std::vector<std::map<GroupRingElement::Key, std::int64_t>> partial(workers);
    std::vector<std::uint64_t> counts(workers, 0);
    parallel_blocks(total, [&](int w, std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> acc(static_cast<std::size_t>(t) * 2 * r);
        for (std::size_t idx = begin; idx < end; ++idx) {
            std::fill(acc.begin(), acc.end(), 0);
            if (!walker.run(b, assignment, info.component_of, decode_top(idx, sizes), &acc, nullptr)) continue;
            ++counts[w];
            auto& c = partial[w][acc];
            c = detail::add_checked(c, 1);
        }
    });
    const AbelianGroup& base = out.value.base();
    for (int w = 0; w < workers; ++w) {
        out.colorings += counts[w];
        for (const auto& [key, c] : partial[w]) out.value.add_term(base.reduce(key), c);
    }
    return out;
}

}  // namespace

std::optional<Coloring> propagate_coloring(const BraidSequence& b, const std::vector<ColorPair>& top,
                                           const TernaryStructure& s, const StateSumOptions& opt) {
    if (static_cast<int>(top.size()) != b.strands) throw std::invalid_argument("one color pair per strand expected");
    for (auto [x, y] : top)
        if (x < 0 || y < 0 || x >= s.m || y >= s.m) throw std::invalid_argument("color out of range");
    const SystemCocycle a = weightless(s);
    const Walker walker(a, opt);
    Coloring c;
    c.top = top;
    const ClosureInfo info = closure_components(b);
    if (!walker.run(b, std::vector<int>(b.strands, 0), info.component_of, top, nullptr, &c)) return std::nullopt;
    return c;
}

std::optional<Coloring> propagate_coloring(const FramedBraidWord& b, const std::vector<ColorPair>& top,
                                           const TernaryStructure& s, const StateSumOptions& opt) {
    return propagate_coloring(to_sequence(b), top, s, opt);
}

std::vector<Coloring> enumerate_colorings(const BraidSequence& b, const TernaryStructure& s,
                                          const StateSumOptions& opt) {
    const std::vector<int> sizes(b.strands, s.m);
    const std::uint64_t total = top_count(sizes);
    std::vector<Coloring> out;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        if (auto c = propagate_coloring(b, decode_top(idx, sizes), s, opt)) out.push_back(std::move(*c));
    return out;
}

std::uint64_t count_colorings(const BraidSequence& b, const TernaryStructure& s, const StateSumOptions& opt) {
    return sum_invariant(b, weightless(s), std::vector<int>(b.strands, 0), opt).colorings;
}

InvariantValue vector_invariant(const BraidSequence& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt) {
    return sum_invariant(b, lift_single(s, psi), std::vector<int>(b.strands, 0), opt);
}

InvariantValue vector_invariant(const FramedBraidWord& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt) {
    return vector_invariant(to_sequence(b), s, psi, opt);
}

InvariantValue ribbon_invariant(const BraidSequence& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt) {
    if (closure_components(b).components.size() != 1)
        throw std::invalid_argument("closure has several components; use vector_invariant");
    return vector_invariant(b, s, psi, opt);
}

InvariantValue ribbon_invariant(const FramedBraidWord& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt) {
    return ribbon_invariant(to_sequence(b), s, psi, opt);
}

InvariantValue statesum_for_system(const BraidSequence& b, const SystemCocycle& alpha,
                                   const std::vector<int>& assignment, const StateSumOptions& opt) {
    return sum_invariant(b, alpha, assignment, opt);
}

InvariantValue statesum_for_system(const BraidSequence& b, const SystemCocycle& alpha, const StateSumOptions& opt) {
    const ClosureInfo info = closure_components(b);
    const int t = static_cast<int>(info.components.size()), q = alpha.system.q();
    InvariantValue total;
    total.components = t;
    total.value = GroupRingElement(AbelianGroup::power(alpha.coeffs, 2 * t));
    std::vector<int> per_comp(t, 0);
    for (;;) {
        std::vector<int> assignment(b.strands);
        for (int s = 0; s < b.strands; ++s) assignment[s] = per_comp[info.component_of[s]];
        InvariantValue v = sum_invariant(b, alpha, assignment, opt);
        total.value += v.value;
        total.colorings += v.colorings;
        int k = 0;
        while (k < t && ++per_comp[k] == q) per_comp[k++] = 0;
        if (k == t) break;
    }
    return total;
}

Cyclotomic character_image(const InvariantValue& v, const Character& chi) {
    const std::size_t r = chi.source().rank();
    if (v.value.base().rank() != r * 2 * v.components) throw std::invalid_argument("character source mismatch");
    ZetaSum sum(chi.root_order());
    for (const auto& [key, c] : v.value.terms()) {
        std::int64_t e = 0;
        if (r > 0)
            for (std::size_t off = 0; off < key.size(); off += r) e += chi.exponent(key.data() + off);
        sum.add(e, c);
    }
    return sum.value();
}

}  // namespace tsdq
