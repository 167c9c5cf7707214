#include "tsdq/quantum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace tsdq {

// ------------------------------------------------------------ operator

namespace {

std::vector<std::size_t> strides(const std::vector<int>& sizes, const std::vector<int>& carriers) {
    const std::size_t slots = carriers.size() * 2;
    std::vector<std::size_t> st(slots + 1, 1);
    for (std::size_t k = slots; k-- > 0;) {
        st[k] = st[k + 1] * static_cast<std::size_t>(sizes[carriers[k / 2]]);
        if (st[k] > max_cells() || st[k] > 0xFFFFFFFFull) throw std::length_error("operator exceeds the cell limit");
    }
    return st;
}

std::int32_t norm_exp(std::int64_t e, int n) { return static_cast<std::int32_t>(mod_floor(e, n)); }

}  // namespace

MonomialOperator MonomialOperator::identity(std::vector<int> sizes, std::vector<int> carriers, int root_order) {
    if (root_order < 1) throw std::invalid_argument("root order must be positive");
    for (int c : carriers)
        if (c < 0 || c >= static_cast<int>(sizes.size())) throw std::invalid_argument("carrier out of range");
    MonomialOperator op;
    const std::size_t dim = strides(sizes, carriers)[0];
    op.sizes_ = std::move(sizes);
    op.domain_ = carriers;
    op.codomain_ = std::move(carriers);
    op.root_order_ = root_order;
    op.targets_.resize(dim);
    std::iota(op.targets_.begin(), op.targets_.end(), 0u);
    op.exps_.assign(dim, 0);
    return op;
}

std::vector<int> MonomialOperator::decode(std::size_t index, bool codomain) const {
    const auto& car = codomain ? codomain_ : domain_;
    std::vector<int> t(car.size() * 2);
    for (std::size_t k = t.size(); k-- > 0;) {
        const std::size_t m = static_cast<std::size_t>(sizes_[car[k / 2]]);
        t[k] = static_cast<int>(index % m);
        index /= m;
    }
    return t;
}

std::size_t MonomialOperator::encode(const std::vector<int>& tuple, bool codomain) const {
    const auto& car = codomain ? codomain_ : domain_;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < tuple.size(); ++k) idx = idx * static_cast<std::size_t>(sizes_[car[k / 2]]) + tuple[k];
    return idx;
}

MonomialOperator MonomialOperator::rescaled(int root_order) const {
    if (root_order % root_order_ != 0) throw std::invalid_argument("rescale target must be a multiple");
    MonomialOperator r = *this;
    const int s = root_order / root_order_;
    r.root_order_ = root_order;
    for (auto& e : r.exps_) e *= s;
    return r;
}

MonomialOperator MonomialOperator::then(const MonomialOperator& next) const {
    if (codomain_ != next.domain_ || sizes_ != next.sizes_) throw std::invalid_argument("operators do not compose");
    if (root_order_ != next.root_order_) {
        const int l = static_cast<int>(lcm64(root_order_, next.root_order_));
        return rescaled(l).then(next.rescaled(l));
    }
    MonomialOperator r = *this;
    r.codomain_ = next.codomain_;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        const std::uint32_t j = targets_[i];
        r.targets_[i] = next.targets_[j];
        r.exps_[i] = norm_exp(static_cast<std::int64_t>(exps_[i]) + next.exps_[j], root_order_);
    }
    return r;
}

MonomialOperator MonomialOperator::inverse() const {
    MonomialOperator r = *this;
    std::swap(r.domain_, r.codomain_);
    std::vector<bool> seen(targets_.size(), false);
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        const std::uint32_t j = targets_[i];
        if (seen[j]) throw std::domain_error("operator is not invertible");
        seen[j] = true;
        r.targets_[j] = static_cast<std::uint32_t>(i);
        r.exps_[j] = norm_exp(-static_cast<std::int64_t>(exps_[i]), root_order_);
    }
    return r;
}

std::optional<std::size_t> MonomialOperator::first_difference(const MonomialOperator& o) const {
    if (sizes_ != o.sizes_ || domain_ != o.domain_ || codomain_ != o.codomain_) return std::size_t{0};
    if (root_order_ != o.root_order_) {
        const int l = static_cast<int>(lcm64(root_order_, o.root_order_));
        return rescaled(l).first_difference(o.rescaled(l));
    }
    for (std::size_t i = 0; i < targets_.size(); ++i)
        if (targets_[i] != o.targets_[i] || exps_[i] != o.exps_[i]) return i;
    return std::nullopt;
}

ZetaSum trace_sum(const MonomialOperator& op) {
    ZetaSum s(op.root_order());
    if (op.domain() != op.codomain()) return s;
    const std::size_t dim = op.dimension();
    const int workers = std::max(1, worker_count());
    std::vector<ZetaSum> partial(workers, ZetaSum(op.root_order()));
    parallel_blocks(dim, [&](int w, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            if (op.target(i) == i) partial[w].add(op.exponent(i));
    });
    for (const auto& p : partial) s.merge(p);
    return s;
}

Cyclotomic trace(const MonomialOperator& op) { return trace_sum(op).value(); }

std::string zeta_sum_string(const ZetaSum& s) {
    std::string out;
    for (int k = 0; k < s.order(); ++k) {
        const std::int64_t c = s.counts()[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (k == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

// ------------------------------------------------------------ contexts

WeightContext WeightContext::make(TernaryStructure s, Cochain2 psi, Character chi) {
    if (psi.structure.m != s.m || psi.structure.table != s.table)
        throw std::invalid_argument("cocycle lives on a different structure");
    if (chi.source() != psi.coeffs) throw std::invalid_argument("character source differs from cocycle coefficients");
    return WeightContext{std::move(s), std::move(psi), std::move(chi)};
}

SystemWeightContext as_system(const WeightContext& ctx) {
    SystemCocycle a(single_system(ctx.structure), ctx.cocycle.coeffs);
    a.values[0] = ctx.cocycle.values;
    return SystemWeightContext{std::move(a), ctx.character};
}

namespace {

class Tables {
public:
    explicit Tables(const SystemWeightContext& ctx) : c_(ctx.cocycle.system), n_(ctx.character.root_order()) {
        if (ctx.character.source() != ctx.cocycle.coeffs)
            throw std::invalid_argument("character source differs from cocycle coefficients");
        const int q = c_.q();
        exps_.resize(static_cast<std::size_t>(q) * q);
        linv_.resize(static_cast<std::size_t>(q) * q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                const int mi = c_.sizes[i], mj = c_.sizes[j];
                auto& e = exps_[i * q + j];
                auto& l = linv_[i * q + j];
                e.assign(static_cast<std::size_t>(mi) * mj * mj, 0);
                l.assign(static_cast<std::size_t>(mi) * mj * mj, -1);
                for (int x = 0; x < mi; ++x)
                    for (int y = 0; y < mj; ++y)
                        for (int z = 0; z < mj; ++z) {
                            const std::size_t k = (static_cast<std::size_t>(x) * mj + y) * mj + z;
                            if (ctx.cocycle.rank() > 0) e[k] = static_cast<int>(ctx.character.exponent(ctx.cocycle.at(i, j, x, y, z)));
                            auto& cell = l[(static_cast<std::size_t>(c_.T(i, j, x, y, z)) * mj + y) * mj + z];
                            cell = cell == -1 ? x : -2;
                        }
            }
    }

    int root_order() const { return n_; }
    const std::vector<int>& sizes() const { return c_.sizes; }
    int T(int i, int j, int x, int y, int z) const { return c_.T(i, j, x, y, z); }
    int e(int i, int j, int x, int y, int z) const {
        const int mj = c_.sizes[j];
        return exps_[i * c_.q() + j][(static_cast<std::size_t>(x) * mj + y) * mj + z];
    }
    int L(int i, int j, int p, int y, int z) const {
        const int mj = c_.sizes[j];
        const int v = linv_[i * c_.q() + j][(static_cast<std::size_t>(p) * mj + y) * mj + z];
        if (v < 0) throw std::domain_error("no left inverse: T(., y, z) is not bijective");
        return v;
    }

private:
    const CompatibleSystem& c_;
    int n_;
    std::vector<std::vector<int>> exps_;
    std::vector<std::vector<int>> linv_;
};

// Fills an operator from a pointwise rule fn(in, out) -> exponent.
template <class Fn>
MonomialOperator build(const Tables& t, const std::vector<int>& domain, const std::vector<int>& codomain, Fn fn) {
    MonomialOperator op = MonomialOperator::identity(t.sizes(), domain, t.root_order());
    op.set_codomain(codomain);
    const std::size_t dim = op.dimension();
    auto& targets = op.mutable_targets();
    auto& exps = op.mutable_exponents();
    parallel_blocks(dim, [&](int, std::size_t b, std::size_t e) {
        if (b == e) return;
        std::vector<int> in = op.decode(b), out(in.size());
        for (std::size_t i = b; i < e; ++i) {
            exps[i] = static_cast<std::int32_t>(mod_floor(fn(in, out), t.root_order()));
            targets[i] = static_cast<std::uint32_t>(op.encode(out, true));
            for (std::size_t k = in.size(); k-- > 0;) {
                if (++in[k] < t.sizes()[domain[k / 2]]) break;
                in[k] = 0;
            }
        }
    });
    return op;
}

MonomialOperator braid_op(const Tables& t, const std::vector<int>& carriers, int pos, int sign) {
    const int n = static_cast<int>(carriers.size());
    if (pos < 1 || pos >= n) throw std::out_of_range("braiding position out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("braiding sign must be +-1");
    std::vector<int> cod = carriers;
    std::swap(cod[pos - 1], cod[pos]);
    const int a = 2 * (pos - 1);
    if (sign > 0) {
        const int i = carriers[pos - 1], j = carriers[pos];
        return build(t, carriers, cod, [&](const std::vector<int>& in, std::vector<int>& out) {
            out = in;
            const int x1 = in[a], x2 = in[a + 1], y1 = in[a + 2], y2 = in[a + 3];
            out[a] = y1;
            out[a + 1] = y2;
            out[a + 2] = t.T(i, j, x1, y1, y2);
            out[a + 3] = t.T(i, j, x2, y1, y2);
            return t.e(i, j, x1, y1, y2) + t.e(i, j, x2, y1, y2);
        });
    }
    const int j = carriers[pos - 1], i = carriers[pos];
    return build(t, carriers, cod, [&](const std::vector<int>& in, std::vector<int>& out) {
        out = in;
        const int a1 = in[a], a2 = in[a + 1], p1 = in[a + 2], p2 = in[a + 3];
        const int u1 = t.L(i, j, p1, a1, a2), u2 = t.L(i, j, p2, a1, a2);
        out[a] = u1;
        out[a + 1] = u2;
        out[a + 2] = a1;
        out[a + 3] = a2;
        return -(t.e(i, j, u1, a1, a2) + t.e(i, j, u2, a1, a2));
    });
}

MonomialOperator twist_op(const Tables& t, const std::vector<int>& carriers, int strand, int power) {
    const int n = static_cast<int>(carriers.size());
    if (strand < 1 || strand > n) throw std::out_of_range("twist strand out of range");
    const int i = carriers[strand - 1], a = 2 * (strand - 1);
    MonomialOperator theta = build(t, carriers, carriers, [&](const std::vector<int>& in, std::vector<int>& out) {
        out = in;
        const int x = in[a], y = in[a + 1];
        out[a] = t.T(i, i, x, x, y);
        out[a + 1] = t.T(i, i, y, x, y);
        return t.e(i, i, x, x, y) + t.e(i, i, y, x, y);
    });
    MonomialOperator r = MonomialOperator::identity(t.sizes(), carriers, t.root_order());
    for (int k = 0; k < std::abs(power); ++k) r = r.then(theta);
    return power < 0 ? r.inverse() : r;
}

MonomialOperator phi(const Tables& t, const BraidSequence& b, const std::vector<int>& carriers) {
    if (static_cast<int>(carriers.size()) != b.strands) throw std::invalid_argument("one carrier per strand expected");
    std::vector<int> cur = carriers;
    MonomialOperator op = MonomialOperator::identity(t.sizes(), cur, t.root_order());
    for (const auto& it : b.items) {
        if (it.kind == BraidItem::Kind::Twist) {
            op = op.then(twist_op(t, cur, it.index, it.power));
        } else {
            op = op.then(braid_op(t, cur, it.index, it.power));
            std::swap(cur[it.index - 1], cur[it.index]);
        }
    }
    return op;
}

}  // namespace

MonomialOperator braiding_operator(const SystemWeightContext& ctx, const std::vector<int>& carriers, int pos,
                                   int sign) {
    return braid_op(Tables(ctx), carriers, pos, sign);
}

MonomialOperator twist_operator(const SystemWeightContext& ctx, const std::vector<int>& carriers, int strand,
                                int power) {
    return twist_op(Tables(ctx), carriers, strand, power);
}

MonomialOperator phi_of_sequence(const SystemWeightContext& ctx, const BraidSequence& b,
                                 const std::vector<int>& carriers) {
    return phi(Tables(ctx), b, carriers);
}

MonomialOperator braiding_operator(const WeightContext& ctx, int n, int pos, int sign) {
    return braiding_operator(as_system(ctx), std::vector<int>(n, 0), pos, sign);
}

MonomialOperator twist_operator(const WeightContext& ctx, int n, int strand, int power) {
    return twist_operator(as_system(ctx), std::vector<int>(n, 0), strand, power);
}

MonomialOperator phi_of_sequence(const WeightContext& ctx, const BraidSequence& b) {
    return phi_of_sequence(as_system(ctx), b, std::vector<int>(b.strands, 0));
}

MonomialOperator phi_of_word(const WeightContext& ctx, const FramedBraidWord& b) {
    return phi_of_sequence(ctx, to_sequence(b));
}

Cyclotomic quantum_invariant(const WeightContext& ctx, const FramedBraidWord& b) { return trace(phi_of_word(ctx, b)); }
Cyclotomic quantum_invariant(const WeightContext& ctx, const BraidSequence& b) {
    return trace(phi_of_sequence(ctx, b));
}

MonomialOperator diagonal_operator(const WeightContext& ctx, int n, const Cochain1& f, bool inverse) {
    if (f.structure.m != ctx.structure.m || f.coeffs != ctx.cocycle.coeffs)
        throw std::invalid_argument("1-cochain does not match the context");
    const SystemWeightContext sys = as_system(ctx);
    const Tables t(sys);
    std::vector<int> fe(ctx.structure.m, 0);
    if (f.rank() > 0)
        for (int x = 0; x < ctx.structure.m; ++x) fe[x] = static_cast<int>(ctx.character.exponent(f.at(x)));
    const std::vector<int> car(n, 0);
    return build(t, car, car, [&](const std::vector<int>& in, std::vector<int>& out) {
        out = in;
        std::int64_t e = 0;
        for (int v : in) e += fe[v];
        return inverse ? -e : e;
    });
}

Comparison compare_invariants(const WeightContext& ctx, const BraidSequence& b) {
    Comparison c;
    c.invariant = vector_invariant(b, ctx.structure, ctx.cocycle);
    c.state_sum = character_image(c.invariant, ctx.character);
    c.quantum = quantum_invariant(ctx, b);
    c.equal = c.state_sum == c.quantum;
    return c;
}

Comparison compare_invariants(const WeightContext& ctx, const FramedBraidWord& b) {
    return compare_invariants(ctx, to_sequence(b));
}

// ------------------------------------------------------------ coherence

namespace {

struct Identity {
    int id;
    int strands;
    const char* lhs;
    const char* rhs;  // nullptr: identity operator
};

const std::vector<Identity>& identities() {
    static const std::vector<Identity> ids{
        {0, 3, "n=3; s1 s2 s1", "n=3; s2 s1 s2"},
        {1, 2, "n=2; t2 s1", "n=2; s1 t1"},
        {2, 2, "n=2; t1 s1", "n=2; s1 t2"},
        {3, 2, "n=2; t1 t2 s1 s1", "n=2; s1 s1 t1 t2"},
        {4, 2, "n=2; s1 s1^-1", nullptr},
        {5, 2, "n=2; s1^-1 s1", nullptr},
        {6, 1, "n=1; t1 t1^-1", nullptr},
        {7, 1, "n=1; t1^-1 t1", nullptr},
    };
    return ids;
}

// Pushes one basis tuple through a braid sequence without building operators.
class PointwiseEvaluator {
public:
    explicit PointwiseEvaluator(const Tables& t) : t_(t), theta_inv_(t.sizes().size()) {
        for (std::size_t i = 0; i < theta_inv_.size(); ++i) {
            const int m = t.sizes()[i], c = static_cast<int>(i);
            auto& inv = theta_inv_[i];
            inv.assign(static_cast<std::size_t>(m) * m, -1);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    auto& cell = inv[t.T(c, c, x, x, y) * m + t.T(c, c, y, x, y)];
                    cell = cell == -1 ? x * m + y : -2;
                }
        }
    }

    // Applies b to the tuple in place and returns the exponent; cur tracks carriers.
    std::int64_t apply(const BraidSequence& b, std::vector<int>& cur, std::vector<int>& s) const {
        std::int64_t e = 0;
        for (const auto& it : b.items) {
            if (it.kind == BraidItem::Kind::Twist) {
                const int i = cur[it.index - 1], a = 2 * (it.index - 1), m = t_.sizes()[i];
                for (int k = 0; k < std::abs(it.power); ++k) {
                    int x = s[a], y = s[a + 1];
                    if (it.power > 0) {
                        e += t_.e(i, i, x, x, y) + t_.e(i, i, y, x, y);
                        s[a] = t_.T(i, i, x, x, y);
                        s[a + 1] = t_.T(i, i, y, x, y);
                    } else {
                        const int pre = theta_inv_[i][x * m + y];
                        if (pre < 0) throw std::domain_error("operator is not invertible");
                        x = pre / m;
                        y = pre % m;
                        e -= t_.e(i, i, x, x, y) + t_.e(i, i, y, x, y);
                        s[a] = x;
                        s[a + 1] = y;
                    }
                }
                continue;
            }
            const int a = 2 * (it.index - 1);
            if (it.power > 0) {
                const int i = cur[it.index - 1], j = cur[it.index];
                const int x1 = s[a], x2 = s[a + 1], y1 = s[a + 2], y2 = s[a + 3];
                e += t_.e(i, j, x1, y1, y2) + t_.e(i, j, x2, y1, y2);
                s[a] = y1;
                s[a + 1] = y2;
                s[a + 2] = t_.T(i, j, x1, y1, y2);
                s[a + 3] = t_.T(i, j, x2, y1, y2);
            } else {
                const int j = cur[it.index - 1], i = cur[it.index];
                const int a1 = s[a], a2 = s[a + 1], p1 = s[a + 2], p2 = s[a + 3];
                const int u1 = t_.L(i, j, p1, a1, a2), u2 = t_.L(i, j, p2, a1, a2);
                e -= t_.e(i, j, u1, a1, a2) + t_.e(i, j, u2, a1, a2);
                s[a] = u1;
                s[a + 1] = u2;
                s[a + 2] = a1;
                s[a + 3] = a2;
            }
            std::swap(cur[it.index - 1], cur[it.index]);
        }
        return e;
    }

private:
    const Tables& t_;
    std::vector<std::vector<int>> theta_inv_;
};

CheckResult coherence(const SystemWeightContext& ctx, const std::vector<int>& which, bool with_carriers) {
    const Tables t(ctx);
    const PointwiseEvaluator ev(t);
    const int q = ctx.cocycle.system.q();
    const std::int64_t N = t.root_order();
    constexpr std::size_t kBlock = 4096;
    CheckResult r;
    for (const auto& idt : identities()) {
        if (std::find(which.begin(), which.end(), idt.id) == which.end()) continue;
        const BraidSequence lhs = parse_sequence(idt.lhs);
        const std::optional<BraidSequence> rhs =
            idt.rhs ? std::optional<BraidSequence>(parse_sequence(idt.rhs)) : std::nullopt;
        std::vector<int> car(idt.strands, 0);
        for (;;) {
            std::vector<int> dims;
            std::size_t dim = 1;
            for (int c : car) {
                dims.push_back(t.sizes()[c]);
                dims.push_back(t.sizes()[c]);
                dim *= static_cast<std::size_t>(t.sizes()[c]) * t.sizes()[c];
            }
            r.total += dim;
            const std::size_t blocks = (dim + kBlock - 1) / kBlock;
            const auto bad = parallel_first(blocks, [&](std::size_t blk) -> std::optional<std::vector<int>> {
                const std::size_t b = blk * kBlock, e = std::min(dim, b + kBlock);
                std::vector<int> in(dims.size()), s1, s2, c1, c2;
                std::size_t rest = b;
                for (std::size_t k = dims.size(); k-- > 0;) {
                    in[k] = static_cast<int>(rest % dims[k]);
                    rest /= dims[k];
                }
                for (std::size_t i = b; i < e; ++i) {
                    s1 = in;
                    c1 = car;
                    const std::int64_t e1 = ev.apply(lhs, c1, s1);
                    s2 = in;
                    c2 = car;
                    const std::int64_t e2 = rhs ? ev.apply(*rhs, c2, s2) : 0;
                    if (s1 != s2 || c1 != c2 || mod_floor(e1 - e2, N) != 0)
                        return std::vector<int>{static_cast<int>(i)};
                    for (std::size_t k = dims.size(); k-- > 0;) {
                        if (++in[k] < dims[k]) break;
                        in[k] = 0;
                    }
                }
                return std::nullopt;
            });
            if (bad) {
                r.pass = false;
                r.counterexample = {idt.id};
                if (with_carriers) r.counterexample.insert(r.counterexample.end(), car.begin(), car.end());
                r.counterexample.push_back(bad->second[0]);
                r.checked += static_cast<std::uint64_t>(bad->second[0]);
                r.detail = std::string(idt.lhs) + (idt.rhs ? std::string(" vs ") + idt.rhs : " vs identity");
                return r;
            }
            r.checked += dim;
            int k = 0;
            while (k < idt.strands && ++car[k] == q) car[k++] = 0;
            if (k == idt.strands) break;
        }
    }
    return r;
}

}  // namespace

CheckResult check_ybe(const WeightContext& ctx) { return coherence(as_system(ctx), {0, 4, 5}, false); }

CheckResult check_twist_coherence(const WeightContext& ctx) {
    return coherence(as_system(ctx), {1, 2, 3, 6, 7}, false);
}

CheckResult check_system_coherence(const SystemWeightContext& ctx) {
    return coherence(ctx, {0, 1, 2, 3, 4, 5, 6, 7}, true);
}

// ------------------------------------------------------------ reports

FixedPointReport fixed_points_vs_colorings(const WeightContext& ctx, const BraidSequence& b) {
    FixedPointReport rep;
    const MonomialOperator op = phi_of_sequence(ctx, b);
    const auto colorings = enumerate_colorings(b, ctx.structure);
    rep.colorings = colorings.size();
    const auto& s = ctx.structure;
    const auto& psi = ctx.cocycle;
    const int N = ctx.character.root_order();
    auto chi = [&](int x, int y, int z) -> std::int64_t {
        return psi.rank() > 0 ? ctx.character.exponent(psi.at(idx3(s.m, x, y, z))) : 0;
    };
    auto theta = [&](ColorPair c) { return ColorPair{s.T(c.first, c.first, c.second), s.T(c.second, c.first, c.second)}; };
    std::size_t next = 0;
    for (std::size_t i = 0; i < op.dimension(); ++i) {
        if (op.target(i) != i) continue;
        ++rep.fixed_points;
        const auto tuple = op.decode(i);
        std::vector<ColorPair> top(b.strands);
        for (int k = 0; k < b.strands; ++k) top[k] = {tuple[2 * k], tuple[2 * k + 1]};
        if (next >= colorings.size() || colorings[next].top != top) {
            rep.detail = "fixed tuple " + std::to_string(i) + " is not a coloring";
            return rep;
        }
        std::int64_t e = 0;
        for (const auto& st : colorings[next].steps) {
            if (st.twist) {
                const auto& it = b.items[st.item];
                ColorPair c = st.before[it.index - 1];
                for (int k = 0; k < std::abs(it.power); ++k) {
                    if (it.power > 0) {
                        e += chi(c.first, c.first, c.second) + chi(c.second, c.first, c.second);
                        c = theta(c);
                    } else {
                        ColorPair pre{-1, -1};
                        for (int x = 0; x < s.m && pre.first < 0; ++x)
                            for (int y = 0; y < s.m; ++y)
                                if (theta({x, y}) == c) {
                                    pre = {x, y};
                                    break;
                                }
                        e -= chi(pre.first, pre.first, pre.second) + chi(pre.second, pre.first, pre.second);
                        c = pre;
                    }
                }
            } else if (st.sign > 0) {
                e += chi(st.under.first, st.over.first, st.over.second) + chi(st.under.second, st.over.first, st.over.second);
            } else {
                const auto& it = b.items[st.item];
                const ColorPair u = st.after[it.index - 1];
                e -= chi(u.first, st.over.first, st.over.second) + chi(u.second, st.over.first, st.over.second);
            }
        }
        if (mod_floor(e - op.exponent(i), N) != 0) {
            rep.detail = "weight differs at fixed tuple " + std::to_string(i);
            return rep;
        }
        ++next;
    }
    if (next != colorings.size()) {
        rep.detail = "some colorings are not fixed tuples";
        return rep;
    }
    rep.match = true;
    return rep;
}

TorusReport torus_link_report(int m, int n, int i) {
    if (m < 2 || n < 1 || i < 0 || i >= m) throw std::invalid_argument("torus report needs m >= 2, n >= 1, 0 <= i < m");
    TorusReport r;
    r.m = m;
    r.n = n;
    r.i = i;
    const WeightContext ctx = WeightContext::make(heap_of_group(cyclic_group(m)), phi_i_cocycle(m, i),
                                                  Character::standard(AbelianGroup::integers(), m));
    BraidSequence b;
    b.strands = 2;
    for (int k = 0; k < 2 * n; ++k) b.items.push_back(BraidItem::cross(1, 1));
    r.trace = quantum_invariant(ctx, b);
    r.state_sum = character_image(vector_invariant(b, ctx.structure, ctx.cocycle), ctx.character);

    const std::int64_t M = m, n64 = n;
    ZetaSum quad(m), printed(m), closed(m);
    quad.add(4 * n64, M * M);
    quad.add(2 * n64, 2 * M * M * (M - 1));
    quad.add(0, M * M * (M - 1) * (M - 1));
    printed.add(4 * n64, n64 * n64);
    printed.add(2 * n64, 2 * n64 * (n64 - 1));
    printed.add(0, n64 * n64 * n64 * n64 + n64);
    const std::int64_t d = gcd64(n, m);
    if (i % (m / d) == 0) {
        closed.add(0, M * M * (d - 1) * (d - 1));
        closed.add(2 * n64, 2 * M * M * (d - 1));
        closed.add(4 * n64, M * M);
    } else {
        closed.add(0, M * M * d * d);
    }
    r.quadratic = quad.value();
    r.printed = printed.value();
    r.closed_form = closed.value();
    r.trace_is_quadratic = r.trace == r.quadratic;
    r.trace_is_printed = r.trace == r.printed;
    r.trace_is_closed_form = r.trace == r.closed_form;
    r.trace_is_state_sum = r.trace == r.state_sum;
    return r;
}

}  // namespace tsdq
