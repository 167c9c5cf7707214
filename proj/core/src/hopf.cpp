#include "tsdq/hopf.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace tsdq {

namespace {

Scalar zero_of(int order) { return Scalar(order); }
Scalar one_of(int order) { return Scalar::constant(order, Rational(1)); }

void accumulate(SparseVec& v, std::uint32_t k, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = v.find(k);
    if (it == v.end()) {
        v.emplace(k, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) v.erase(it);
}

SparseVec basis(std::uint32_t k, int order) { return SparseVec{{k, one_of(order)}}; }

std::size_t product(const std::vector<int>& dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> rep(int d, int k) { return std::vector<int>(static_cast<std::size_t>(k), d); }

// f(v_1 (x) ... (x) v_k)
SparseVec eval(const Tensor& f, const std::vector<const SparseVec*>& args) {
    if (args.size() != f.in_dims().size()) throw std::invalid_argument("eval: arity mismatch");
    SparseVec out;
    const auto& dims = f.in_dims();
    std::function<void(std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t k, std::size_t idx,
                                                                           const Scalar& coef) {
        if (k == args.size()) {
            for (const auto& [i, v] : f.column(idx)) accumulate(out, i, coef * v);
            return;
        }
        for (const auto& [j, v] : *args[k]) rec(k + 1, idx * static_cast<std::size_t>(dims[k]) + j, coef * v);
    };
    rec(0, 0, one_of(f.order()));
    return out;
}

Scalar scalar_part(const SparseVec& v, int order) {
    auto it = v.find(0);
    return it == v.end() ? zero_of(order) : it->second;
}

// Sweedler terms of Delta_k(e_i) for every basis element.
using Terms = std::vector<std::pair<std::vector<int>, Scalar>>;

Tensor delta_power(const Tensor& delta, int d, int k) {
    Tensor acc = Tensor::identity(delta.order(), {d});
    for (int r = 1; r < k; ++r) acc = acc.then(delta.kron(Tensor::identity(delta.order(), rep(d, r - 1))));
    return acc;
}

std::vector<Terms> sweedler(const Tensor& delta, int d, int k) {
    Tensor p = delta_power(delta, d, k);
    std::vector<Terms> out(static_cast<std::size_t>(d));
    const auto dims = rep(d, k);
    for (int i = 0; i < d; ++i)
        for (const auto& [key, v] : p.column(static_cast<std::size_t>(i))) out[i].emplace_back(tensor_tuple(dims, key), v);
    return out;
}

Tensor form_tensor(int order, int d, int arity, const std::vector<Scalar>& values) {
    Tensor t(order, rep(d, arity), {});
    for (std::size_t j = 0; j < values.size(); ++j) t.add(j, 0, values[j]);
    return t;
}

Tensor form_tensor(const TrilinearForm& a) { return form_tensor(a.order, a.dim, 3, a.values); }
Tensor form_tensor(const BilinearForm& s) { return form_tensor(s.order, s.dim, 2, s.values); }

std::size_t idx3d(int d, int x, int y, int z) { return (static_cast<std::size_t>(x) * d + y) * d + z; }

std::vector<int> decode_cex(const std::vector<int>& dims, std::size_t idx) { return tensor_tuple(dims, idx); }

CheckResult tensor_equal(const Tensor& a, const Tensor& b, const std::string& what) {
    CheckResult r;
    r.total = a.in_size();
    if (auto diff = a.first_difference(b)) {
        r.pass = false;
        r.detail = what;
        if (a.in_dims() == b.in_dims() && *diff < a.in_size()) r.counterexample = decode_cex(a.in_dims(), *diff);
        r.checked = *diff + 1;
        return r;
    }
    r.checked = r.total;
    return r;
}

// Dense RREF over sparse rows. Returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<SparseVec>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t pr = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r].count(static_cast<std::uint32_t>(c))) {
                pr = r;
                break;
            }
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        const Scalar inv = inverse(rows[rank].at(static_cast<std::uint32_t>(c)));
        for (auto& [k, v] : rows[rank]) v = v * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            auto it = rows[r].find(static_cast<std::uint32_t>(c));
            if (it == rows[r].end()) continue;
            const Scalar f = it->second;
            for (const auto& [k, v] : rows[rank]) accumulate(rows[r], k, -(f * v));
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

std::vector<std::vector<Scalar>> nullspace(std::vector<SparseVec> rows, std::size_t ncols, int order) {
    auto pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(ncols, zero_of(order));
        v[f] = one_of(order);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            auto it = rows[r].find(static_cast<std::uint32_t>(f));
            if (it != rows[r].end()) v[pivots[r]] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Unique solution of rows * x = rhs, or nullopt.
std::optional<std::vector<Scalar>> solve_unique(std::vector<SparseVec> rows, const std::vector<Scalar>& rhs,
                                                std::size_t ncols, int order) {
    for (std::size_t r = 0; r < rows.size(); ++r) accumulate(rows[r], static_cast<std::uint32_t>(ncols), rhs[r]);
    auto pivots = rref(rows, ncols + 1);
    if (pivots.size() != ncols) return std::nullopt;  // rank deficient or inconsistent
    std::vector<Scalar> x(ncols, zero_of(order));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        auto it = rows[r].find(static_cast<std::uint32_t>(ncols));
        if (it != rows[r].end()) x[pivots[r]] = it->second;
    }
    return x;
}

const Tensor& require_same_order(const Tensor& t, int order) {
    if (t.order() != order) throw std::invalid_argument("scalar fields differ");
    return t;
}

}  // namespace

Scalar scalar(int order, const Rational& v) { return Scalar::constant(order, v); }
Scalar zeta_scalar(int order, std::int64_t k) { return Scalar::zeta_power(order, k); }

// ---------------------------------------------------------------- tensors

std::size_t tensor_index(const std::vector<int>& dims, const std::vector<int>& tuple) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * static_cast<std::size_t>(dims[k]) + tuple[k];
    return idx;
}

std::vector<int> tensor_tuple(const std::vector<int>& dims, std::size_t index) {
    std::vector<int> t(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        t[k] = static_cast<int>(index % static_cast<std::size_t>(dims[k]));
        index /= static_cast<std::size_t>(dims[k]);
    }
    return t;
}

Tensor::Tensor(int order, std::vector<int> in_dims, std::vector<int> out_dims)
    : order_(order), in_(std::move(in_dims)), out_(std::move(out_dims)) {
    if (product(in_) > max_cells() || product(out_) > (std::size_t{1} << 32))
        throw std::length_error("tensor exceeds the cell limit");
    cols_.resize(product(in_));
}

std::size_t Tensor::out_size() const { return product(out_); }

Tensor Tensor::identity(int order, const std::vector<int>& dims) {
    Tensor t(order, dims, dims);
    for (std::size_t j = 0; j < t.in_size(); ++j) t.add(j, j, one_of(order));
    return t;
}

Tensor Tensor::permutation(int order, const std::vector<int>& dims, const std::vector<int>& perm) {
    std::vector<int> od(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) od[k] = dims[perm[k]];
    Tensor t(order, dims, od);
    std::vector<int> o(perm.size());
    for (std::size_t j = 0; j < t.in_size(); ++j) {
        auto in = tensor_tuple(dims, j);
        for (std::size_t k = 0; k < perm.size(); ++k) o[k] = in[perm[k]];
        t.add(j, tensor_index(od, o), one_of(order));
    }
    return t;
}

void Tensor::add(std::size_t j, std::size_t i, const Scalar& v) {
    accumulate(cols_[j], static_cast<std::uint32_t>(i), v);
}

void Tensor::set_column(std::size_t j, SparseVec v) {
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    cols_[j] = std::move(v);
}

Tensor Tensor::then(const Tensor& next) const {
    if (out_ != next.in_) throw std::invalid_argument("composition: dimension mismatch");
    require_same_order(next, order_);
    Tensor r(order_, in_, next.out_);
    for (std::size_t j = 0; j < cols_.size(); ++j) r.cols_[j] = next.apply(cols_[j]);
    return r;
}

Tensor Tensor::kron(const Tensor& other) const {
    require_same_order(other, order_);
    Tensor r(order_, concat(in_, other.in_), concat(out_, other.out_));
    const std::size_t bin = other.in_size(), bout = other.out_size();
    for (std::size_t ja = 0; ja < cols_.size(); ++ja)
        for (std::size_t jb = 0; jb < bin; ++jb) {
            auto& col = r.cols_[ja * bin + jb];
            for (const auto& [ia, va] : cols_[ja])
                for (const auto& [ib, vb] : other.cols_[jb])
                    accumulate(col, static_cast<std::uint32_t>(ia * bout + ib), va * vb);
        }
    return r;
}

SparseVec Tensor::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, s] : v)
        for (const auto& [i, w] : cols_[j]) accumulate(out, i, s * w);
    return out;
}

std::optional<std::size_t> Tensor::first_difference(const Tensor& o) const {
    if (in_ != o.in_ || out_ != o.out_ || order_ != o.order_) return std::size_t{0};
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (cols_[j] != o.cols_[j]) return j;
    return std::nullopt;
}

// ---------------------------------------------------------------- Hopf algebras

HopfCheck validate_hopf(const HopfData& h) {
    HopfCheck r;
    const int d = h.dim, o = h.order;
    const Tensor I = Tensor::identity(o, {d});
    const Tensor one = Tensor::identity(o, {});
    const Tensor unit_counit = h.eps.then(h.eta);
    auto fail = [&](const char* axiom) {
        r.pass = false;
        r.failing_axiom = axiom;
        return r;
    };
    try {
        if (h.mu.kron(I).then(h.mu) != I.kron(h.mu).then(h.mu)) return fail("associativity");
        if (h.eta.kron(I).then(h.mu) != I || I.kron(h.eta).then(h.mu) != I) return fail("unit");
        if (h.delta.then(h.delta.kron(I)) != h.delta.then(I.kron(h.delta))) return fail("coassociativity");
        if (h.delta.then(h.eps.kron(I)) != I || h.delta.then(I.kron(h.eps)) != I) return fail("counit");
        const Tensor shuffle = Tensor::permutation(o, {d, d, d, d}, {0, 2, 1, 3});
        if (h.mu.then(h.delta) != h.delta.kron(h.delta).then(shuffle).then(h.mu.kron(h.mu)))
            return fail("comultiplication is an algebra map");
        if (h.eta.then(h.delta) != h.eta.kron(h.eta)) return fail("comultiplication preserves the unit");
        if (h.mu.then(h.eps) != h.eps.kron(h.eps) || h.eta.then(h.eps) != one) return fail("counit is an algebra map");
        if (h.delta.then(h.antipode.kron(I)).then(h.mu) != unit_counit ||
            h.delta.then(I.kron(h.antipode)).then(h.mu) != unit_counit)
            return fail("antipode");
    } catch (const std::invalid_argument&) {
        return fail("dimensions");
    }
    r.pass = true;
    r.involutory = h.antipode.then(h.antipode) == I;
    r.cocommutative = h.delta.then(Tensor::permutation(o, {d, d}, {1, 0})) == h.delta;
    return r;
}

HopfData group_algebra(const FiniteGroup& g, int order) {
    HopfData h;
    h.name = "group-algebra:" + g.name;
    h.dim = g.order;
    h.order = order;
    const int d = g.order;
    h.mu = Tensor(order, {d, d}, {d});
    h.delta = Tensor(order, {d}, {d, d});
    h.eta = Tensor(order, {}, {d});
    h.eps = Tensor(order, {d}, {});
    h.antipode = Tensor(order, {d}, {d});
    const Scalar one = one_of(order);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) h.mu.add(static_cast<std::size_t>(a) * d + b, g(a, b), one);
        h.delta.add(a, static_cast<std::size_t>(a) * d + a, one);
        h.eps.add(a, 0, one);
        h.antipode.add(a, g.inv[a], one);
    }
    h.eta.add(0, g.identity, one);
    return h;
}

TsdObject quantum_heap(const HopfData& h) {
    auto v = validate_hopf(h);
    if (!v.pass) throw std::invalid_argument("quantum heap: not a Hopf algebra (" + v.failing_axiom + ")");
    if (!v.involutory) throw std::invalid_argument("quantum heap: antipode is not involutory");
    const int d = h.dim, o = h.order;
    const Tensor I = Tensor::identity(o, {d});
    TsdObject t;
    t.name = "quantum-heap:" + h.name;
    t.dim = d;
    t.order = o;
    t.delta = h.delta;
    t.eps = h.eps;
    t.eta = h.eta;
    t.T = I.kron(h.antipode).kron(I).then(h.mu.kron(I)).then(h.mu);
    t.T_inv = Tensor::permutation(o, {d, d, d}, {0, 2, 1}).then(t.T);
    return t;
}

Tensor quantum_conjugation(const HopfData& h) {
    const int d = h.dim, o = h.order;
    const Tensor I = Tensor::identity(o, {d});
    return I.kron(h.delta)
        .then(Tensor::permutation(o, {d, d, d}, {1, 0, 2}))
        .then(h.antipode.kron(I).kron(I))
        .then(h.mu.kron(I))
        .then(h.mu);
}

TsdObject double_conjugation(const HopfData& h) {
    const int d = h.dim, o = h.order;
    const Tensor q = quantum_conjugation(h);
    TsdObject t;
    t.name = "double-conjugation:" + h.name;
    t.dim = d;
    t.order = o;
    t.delta = h.delta;
    t.eps = h.eps;
    t.eta = h.eta;
    t.T = q.kron(Tensor::identity(o, {d})).then(q);
    return t;
}

TsdObject linearize(const TernaryStructure& s, int order) {
    const int d = s.m;
    TsdObject t;
    t.name = s.name;
    t.dim = d;
    t.order = order;
    t.delta = Tensor(order, {d}, {d, d});
    t.eps = Tensor(order, {d}, {});
    t.T = Tensor(order, {d, d, d}, {d});
    const Scalar one = one_of(order);
    for (int x = 0; x < d; ++x) {
        t.delta.add(x, static_cast<std::size_t>(x) * d + x, one);
        t.eps.add(x, 0, one);
    }
    if (s.has_left_inverse()) t.T_inv = Tensor(order, {d, d, d}, {d});
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                t.T.add(idx3d(d, x, y, z), s.T(x, y, z), one);
                if (t.T_inv) t.T_inv->add(idx3d(d, x, y, z), s.L(x, y, z), one);
            }
    return t;
}

bool is_cocommutative(const TsdObject& d) {
    return d.delta.then(Tensor::permutation(d.order, {d.dim, d.dim}, {1, 0})) == d.delta;
}

CheckResult check_binary_sd_object(const HopfData& h, const Tensor& q) {
    const int d = h.dim, o = h.order;
    const auto D2 = sweedler(h.delta, d, 2);
    const std::size_t n = static_cast<std::size_t>(d) * d * d;
    auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
        const auto t = tensor_tuple(rep(d, 3), idx);
        const SparseVec ey = basis(t[2], o);
        const SparseVec xy = q.column(static_cast<std::size_t>(t[0]) * d + t[1]);
        const SparseVec lhs = eval(q, {&xy, &ey});
        SparseVec rhs;
        for (const auto& [zs, c] : D2[t[2]]) {
            const SparseVec a = q.column(static_cast<std::size_t>(t[0]) * d + zs[0]);
            const SparseVec b = q.column(static_cast<std::size_t>(t[1]) * d + zs[1]);
            for (const auto& [k, v] : eval(q, {&a, &b})) accumulate(rhs, k, c * v);
        }
        if (lhs != rhs) return t;
        return std::nullopt;
    });
    CheckResult r;
    r.total = n;
    r.checked = hit ? hit->first + 1 : n;
    if (hit) {
        r.pass = false;
        r.counterexample = hit->second;
        r.detail = "self-distributivity";
    }
    return r;
}

CheckResult check_tsd_object(const TsdObject& D) {
    const int d = D.dim, o = D.order;
    const auto D3 = sweedler(D.delta, d, 3);
    const std::size_t n = product(rep(d, 5));
    auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
        const auto t = tensor_tuple(rep(d, 5), idx);
        const SparseVec eu = basis(t[3], o), ev = basis(t[4], o);
        const SparseVec inner = D.T.column(idx3d(d, t[0], t[1], t[2]));
        const SparseVec lhs = eval(D.T, {&inner, &eu, &ev});
        SparseVec rhs;
        for (const auto& [us, cu] : D3[t[3]])
            for (const auto& [vs, cv] : D3[t[4]]) {
                const Scalar c = cu * cv;
                const SparseVec& a = D.T.column(idx3d(d, t[0], us[0], vs[0]));
                const SparseVec& b = D.T.column(idx3d(d, t[1], us[1], vs[1]));
                const SparseVec& e = D.T.column(idx3d(d, t[2], us[2], vs[2]));
                for (const auto& [k, v] : eval(D.T, {&a, &b, &e})) accumulate(rhs, k, c * v);
            }
        if (lhs != rhs) return t;
        return std::nullopt;
    });
    CheckResult r;
    r.total = n;
    if (hit) {
        r.pass = false;
        r.checked = hit->first + 1;
        r.counterexample = hit->second;
        r.detail = "self-distributivity";
        return r;
    }
    r.checked = n;
    const Tensor cube = D.delta.kron(D.delta).kron(D.delta);
    const Tensor shuffled =
        cube.then(Tensor::permutation(o, rep(d, 6), {0, 2, 4, 1, 3, 5})).then(D.T.kron(D.T));
    if (auto c = tensor_equal(D.T.then(D.delta), shuffled, "T is not a comultiplication map"); !c.pass) return c;
    if (auto c = tensor_equal(D.T.then(D.eps), D.eps.kron(D.eps).kron(D.eps), "T is not a counit map"); !c.pass)
        return c;
    return r;
}

CheckResult check_rack_object(const TsdObject& D) {
    if (!D.T_inv) throw std::invalid_argument("rack check needs T_inv");
    const int d = D.dim, o = D.order;
    const auto D2 = sweedler(D.delta, d, 2);
    const std::size_t n = product(rep(d, 3));
    auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
        const auto t = tensor_tuple(rep(d, 3), idx);
        SparseVec expect;
        const Scalar ee = scalar_part(D.eps.column(t[1]), o) * scalar_part(D.eps.column(t[2]), o);
        accumulate(expect, t[0], ee);
        for (int pass = 0; pass < 2; ++pass) {
            const Tensor& first = pass == 0 ? D.T : *D.T_inv;
            const Tensor& second = pass == 0 ? *D.T_inv : D.T;
            SparseVec got;
            for (const auto& [ys, cy] : D2[t[1]])
                for (const auto& [zs, cz] : D2[t[2]]) {
                    const SparseVec& a = first.column(idx3d(d, t[0], ys[0], zs[0]));
                    const SparseVec eb = basis(ys[1], o), ec = basis(zs[1], o);
                    for (const auto& [k, v] : eval(second, {&a, &eb, &ec})) accumulate(got, k, cy * cz * v);
                }
            if (got != expect) {
                auto cex = t;
                cex.push_back(pass);
                return cex;
            }
        }
        return std::nullopt;
    });
    CheckResult r;
    r.total = n;
    r.checked = hit ? hit->first + 1 : n;
    if (hit) {
        r.pass = false;
        r.counterexample = hit->second;
        r.detail = hit->second.back() == 0 ? "T_inv after T" : "T after T_inv";
        r.counterexample.pop_back();
    }
    return r;
}

// ---------------------------------------------------------------- cocycles

TrilinearForm::TrilinearForm(int d, int ord) : dim(d), order(ord) {
    values.assign(static_cast<std::size_t>(d) * d * d, zero_of(ord));
}

BilinearForm::BilinearForm(int d, int ord) : dim(d), order(ord) {
    values.assign(static_cast<std::size_t>(d) * d, zero_of(ord));
}

TrilinearForm counit_form(const TsdObject& D) {
    TrilinearForm a(D.dim, D.order);
    const Tensor e3 = D.eps.kron(D.eps).kron(D.eps);
    for (std::size_t j = 0; j < a.values.size(); ++j) a.values[j] = scalar_part(e3.column(j), D.order);
    return a;
}

TrilinearForm lift_cocycle(const Cochain2& psi, const Character& chi) {
    const int d = psi.structure.m, N = chi.root_order();
    if (chi.source() != psi.coeffs) throw std::invalid_argument("character source differs from the coefficients");
    TrilinearForm a(d, N);
    for (std::size_t j = 0; j < a.values.size(); ++j) a.values[j] = zeta_scalar(N, chi.exponent(psi.at(j)));
    return a;
}

namespace {

// (a * b)(x) = sum a(x_(1)) b(x_(2)) on `arity` tensor factors; rows indexed by x.
std::vector<SparseVec> convolution_rows(const std::vector<Terms>& D2, int d, int arity, const std::vector<Scalar>& a,
                                        bool a_first, int order) {
    const auto dims = rep(d, arity);
    const std::size_t n = product(dims);
    std::vector<SparseVec> rows(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto t = tensor_tuple(dims, j);
        std::function<void(int, std::vector<int>&, std::vector<int>&, const Scalar&)> rec =
            [&](int k, std::vector<int>& f, std::vector<int>& s, const Scalar& c) {
                if (k == arity) {
                    const auto& known = a_first ? f : s;
                    const auto& unknown = a_first ? s : f;
                    accumulate(rows[j], static_cast<std::uint32_t>(tensor_index(dims, unknown)),
                               c * a[tensor_index(dims, known)]);
                    return;
                }
                for (const auto& [legs, v] : D2[t[k]]) {
                    f[k] = legs[0];
                    s[k] = legs[1];
                    rec(k + 1, f, s, c * v);
                }
            };
        std::vector<int> f(arity), s(arity);
        rec(0, f, s, one_of(order));
    }
    return rows;
}

std::optional<std::vector<Scalar>> convolution_solve(const Tensor& delta, const Tensor& eps, int d, int arity,
                                                     const std::vector<Scalar>& a, int order) {
    const auto D2 = sweedler(delta, d, 2);
    const auto dims = rep(d, arity);
    const std::size_t n = product(dims);
    std::vector<Scalar> rhs(n, one_of(order));
    for (std::size_t j = 0; j < n; ++j)
        for (int v : tensor_tuple(dims, j)) rhs[j] = rhs[j] * scalar_part(eps.column(v), order);
    auto beta = solve_unique(convolution_rows(D2, d, arity, a, true, order), rhs, n, order);
    if (!beta) return std::nullopt;
    // Two-sidedness.
    auto rows = convolution_rows(D2, d, arity, *beta, true, order);
    for (std::size_t j = 0; j < n; ++j) {
        Scalar s = zero_of(order);
        for (const auto& [k, v] : rows[j]) s += v * a[k];
        if (s != rhs[j]) return std::nullopt;
    }
    return beta;
}

}  // namespace

std::optional<TrilinearForm> convolution_inverse(const TsdObject& D, const TrilinearForm& a) {
    auto beta = convolution_solve(D.delta, D.eps, D.dim, 3, a.values, a.order);
    if (!beta) return std::nullopt;
    TrilinearForm b(a.dim, a.order);
    b.values = std::move(*beta);
    return b;
}

std::optional<BilinearForm> convolution_inverse(const HopfData& h, const BilinearForm& s) {
    auto beta = convolution_solve(h.delta, h.eps, h.dim, 2, s.values, s.order);
    if (!beta) return std::nullopt;
    BilinearForm b(s.dim, s.order);
    b.values = std::move(*beta);
    return b;
}

CategoricalCocycleReport check_categorical_cocycle(const TsdObject& D, const TrilinearForm& a) {
    if (a.dim != D.dim || a.order != D.order) throw std::invalid_argument("form does not match the object");
    const int d = D.dim, o = D.order;
    const Tensor A = form_tensor(a);
    const auto D2 = sweedler(D.delta, d, 2);
    const auto D4 = sweedler(D.delta, d, 4);
    const std::size_t n = product(rep(d, 5));
    auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
        const auto t = tensor_tuple(rep(d, 5), idx);
        const SparseVec eu = basis(t[3], o), ev = basis(t[4], o);
        Scalar lhs = zero_of(o);
        for (const auto& [xs, cx] : D2[t[0]])
            for (const auto& [ys, cy] : D2[t[1]])
                for (const auto& [zs, cz] : D2[t[2]]) {
                    const Scalar& w = a.at(xs[0], ys[0], zs[0]);
                    if (w.is_zero()) continue;
                    const SparseVec& inner = D.T.column(idx3d(d, xs[1], ys[1], zs[1]));
                    lhs += cx * cy * cz * w * scalar_part(eval(A, {&inner, &eu, &ev}), o);
                }
        Scalar rhs = zero_of(o);
        for (const auto& [xs, cx] : D2[t[0]])
            for (const auto& [us, cu] : D4[t[3]])
                for (const auto& [vs, cv] : D4[t[4]]) {
                    const Scalar& w = a.at(xs[0], us[0], vs[0]);
                    if (w.is_zero()) continue;
                    const SparseVec& p = D.T.column(idx3d(d, xs[1], us[1], vs[1]));
                    const SparseVec& q = D.T.column(idx3d(d, t[1], us[2], vs[2]));
                    const SparseVec& r = D.T.column(idx3d(d, t[2], us[3], vs[3]));
                    rhs += cx * cu * cv * w * scalar_part(eval(A, {&p, &q, &r}), o);
                }
        if (lhs != rhs) return t;
        return std::nullopt;
    });
    CategoricalCocycleReport rep_;
    rep_.cocycle.total = n;
    rep_.cocycle.checked = hit ? hit->first + 1 : n;
    if (hit) {
        rep_.cocycle.pass = false;
        rep_.cocycle.counterexample = hit->second;
        rep_.cocycle.detail = "cocycle condition";
    }
    rep_.inverse = convolution_inverse(D, a);
    rep_.invertible = rep_.inverse.has_value();
    if (D.eta) {
        const SparseVec& eta = D.eta->column(0);
        bool ok = true;
        for (int y = 0; y < d && ok; ++y)
            for (int z = 0; z < d && ok; ++z) {
                const Scalar want = scalar_part(D.eps.column(y), o) * scalar_part(D.eps.column(z), o);
                const SparseVec ey = basis(y, o), ez = basis(z, o);
                ok = scalar_part(eval(A, {&eta, &ey, &ez}), o) == want &&
                     scalar_part(eval(A, {&ey, &eta, &ez}), o) == want &&
                     scalar_part(eval(A, {&ey, &ez, &eta}), o) == want;
            }
        rep_.normalized = ok;
    }
    return rep_;
}

CheckResult check_binary_cocycle(const HopfData& h, const Tensor& q, const BilinearForm& s) {
    const int d = h.dim, o = h.order;
    const Tensor S = form_tensor(s);
    const auto D2 = sweedler(h.delta, d, 2);
    const auto D3 = sweedler(h.delta, d, 3);
    const std::size_t n = product(rep(d, 3));
    auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
        const auto t = tensor_tuple(rep(d, 3), idx);
        const SparseVec ez = basis(t[2], o);
        Scalar lhs = zero_of(o), rhs = zero_of(o);
        for (const auto& [xs, cx] : D2[t[0]]) {
            for (const auto& [ys, cy] : D2[t[1]]) {
                const Scalar& w = s.at(xs[0], ys[0]);
                if (w.is_zero()) continue;
                const SparseVec& qq = q.column(static_cast<std::size_t>(xs[1]) * d + ys[1]);
                lhs += cx * cy * w * scalar_part(eval(S, {&qq, &ez}), o);
            }
            for (const auto& [zs, cz] : D3[t[2]]) {
                const Scalar& w = s.at(xs[0], zs[0]);
                if (w.is_zero()) continue;
                const SparseVec& a = q.column(static_cast<std::size_t>(xs[1]) * d + zs[1]);
                const SparseVec& b = q.column(static_cast<std::size_t>(t[1]) * d + zs[2]);
                rhs += cx * cz * w * scalar_part(eval(S, {&a, &b}), o);
            }
        }
        if (lhs != rhs) return t;
        return std::nullopt;
    });
    CheckResult r;
    r.total = n;
    r.checked = hit ? hit->first + 1 : n;
    if (hit) {
        r.pass = false;
        r.counterexample = hit->second;
        r.detail = "binary cocycle condition";
    }
    return r;
}

TrilinearForm compose_binary_cocycle(const HopfData& h, const Tensor& q, const BilinearForm& s) {
    const int d = h.dim, o = h.order;
    const Tensor S = form_tensor(s);
    const auto D2 = sweedler(h.delta, d, 2);
    TrilinearForm psi(d, o);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const SparseVec ez = basis(z, o);
                Scalar v = zero_of(o);
                for (const auto& [xs, cx] : D2[x])
                    for (const auto& [ys, cy] : D2[y]) {
                        const Scalar& w = s.at(xs[0], ys[0]);
                        if (w.is_zero()) continue;
                        const SparseVec& qq = q.column(static_cast<std::size_t>(xs[1]) * d + ys[1]);
                        v += cx * cy * w * scalar_part(eval(S, {&qq, &ez}), o);
                    }
                psi.at(x, y, z) = v;
            }
    return psi;
}

CheckResult check_hopf_cocycle(const HopfData& h, const BilinearForm& s) {
    const int d = h.dim, o = h.order;
    const Tensor S = form_tensor(s);
    const auto D2 = sweedler(h.delta, d, 2);
    const std::size_t n = product(rep(d, 3));
    CheckResult r;
    r.total = n;
    auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
        const auto t = tensor_tuple(rep(d, 3), idx);
        const SparseVec ex = basis(t[0], o), ez = basis(t[2], o);
        Scalar lhs = zero_of(o), rhs = zero_of(o);
        for (const auto& [xs, cx] : D2[t[0]])
            for (const auto& [ys, cy] : D2[t[1]]) {
                const Scalar& w = s.at(xs[0], ys[0]);
                if (w.is_zero()) continue;
                const SparseVec& prod = h.mu.column(static_cast<std::size_t>(xs[1]) * d + ys[1]);
                lhs += cx * cy * w * scalar_part(eval(S, {&prod, &ez}), o);
            }
        for (const auto& [ys, cy] : D2[t[1]])
            for (const auto& [zs, cz] : D2[t[2]]) {
                const Scalar& w = s.at(ys[1], zs[1]);
                if (w.is_zero()) continue;
                const SparseVec& prod = h.mu.column(static_cast<std::size_t>(ys[0]) * d + zs[0]);
                rhs += cy * cz * w * scalar_part(eval(S, {&ex, &prod}), o);
            }
        if (lhs != rhs) return t;
        return std::nullopt;
    });
    r.checked = hit ? hit->first + 1 : n;
    if (hit) {
        r.pass = false;
        r.counterexample = hit->second;
        r.detail = "Hopf cocycle identity";
        return r;
    }
    const SparseVec& eta = h.eta.column(0);
    for (int x = 0; x < d; ++x) {
        const SparseVec ex = basis(x, o);
        const Scalar want = scalar_part(h.eps.column(x), o);
        if (scalar_part(eval(S, {&eta, &ex}), o) != want || scalar_part(eval(S, {&ex, &eta}), o) != want) {
            r.pass = false;
            r.counterexample = {x};
            r.detail = "normalization";
            return r;
        }
    }
    return r;
}

SdCocycleResult hopf_sigma_to_sd(const HopfData& h, const BilinearForm& s) {
    const auto v = validate_hopf(h);
    if (!v.pass || !v.involutory || !v.cocommutative)
        throw std::invalid_argument("needs a cocommutative involutory Hopf algebra");
    if (auto c = check_hopf_cocycle(h, s); !c.pass) throw std::invalid_argument("not a Hopf 2-cocycle: " + c.detail);
    const auto inv = convolution_inverse(h, s);
    if (!inv) throw std::invalid_argument("sigma is not convolution invertible");
    const int d = h.dim, o = h.order;
    const Tensor Sinv = form_tensor(*inv);
    const auto D2 = sweedler(h.delta, d, 2);
    const auto D4 = sweedler(h.delta, d, 4);
    SdCocycleResult out;
    out.alpha = BilinearForm(d, o);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Scalar val = zero_of(o);
            for (const auto& [xs, cx] : D2[x])
                for (const auto& [ys, cy] : D4[y]) {
                    const Scalar& w = s.at(xs[0], ys[0]);
                    if (w.is_zero()) continue;
                    const SparseVec y3 = h.antipode.column(ys[2]);
                    const SparseVec x2 = basis(xs[1], o), y4 = basis(ys[3], o), y2 = basis(ys[1], o);
                    const SparseVec left = eval(h.mu, {&y3, &x2});
                    const SparseVec prod = eval(h.mu, {&left, &y4});
                    val += cx * cy * w * scalar_part(eval(Sinv, {&y2, &prod}), o);
                }
            out.alpha.at(x, y) = val;
        }
    out.verified = check_binary_cocycle(h, quantum_conjugation(h), out.alpha);
    return out;
}

BilinearForm bicharacter(int m) {
    BilinearForm s(m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) s.at(x, y) = zeta_scalar(m, static_cast<std::int64_t>(x) * y);
    return s;
}

BilinearForm lift_binary(int order, int m, const std::vector<std::int64_t>& exponents) {
    if (exponents.size() != static_cast<std::size_t>(m) * m) throw std::invalid_argument("expected m^2 exponents");
    BilinearForm s(m, order);
    for (std::size_t j = 0; j < exponents.size(); ++j) s.values[j] = zeta_scalar(order, exponents[j]);
    return s;
}

// ---------------------------------------------------------------- braidings

Tensor build_c22_hopf(const TsdObject& D, const TrilinearForm& a) {
    if (!is_cocommutative(D)) throw std::invalid_argument("ribbon constructions need a cocommutative object");
    const int d = D.dim, o = D.order;
    const auto D2 = sweedler(D.delta, d, 2);
    const auto D5 = sweedler(D.delta, d, 5);
    Tensor c(o, rep(d, 4), rep(d, 4));
    for (std::size_t j = 0; j < c.in_size(); ++j) {
        const auto t = tensor_tuple(rep(d, 4), j);
        SparseVec col;
        for (const auto& [xs, cx] : D2[t[0]])
            for (const auto& [ys, cy] : D2[t[1]])
                for (const auto& [zs, cz] : D5[t[2]])
                    for (const auto& [ws, cw] : D5[t[3]]) {
                        const Scalar w = a.at(xs[0], zs[1], ws[1]) * a.at(ys[0], zs[2], ws[2]);
                        if (w.is_zero()) continue;
                        const Scalar coef = cx * cy * cz * cw * w;
                        const SparseVec& p = D.T.column(idx3d(d, xs[1], zs[3], ws[3]));
                        const SparseVec& q = D.T.column(idx3d(d, ys[1], zs[4], ws[4]));
                        const std::size_t head = static_cast<std::size_t>(zs[0]) * d + ws[0];
                        for (const auto& [pk, pv] : p)
                            for (const auto& [qk, qv] : q)
                                accumulate(col, static_cast<std::uint32_t>((head * d + pk) * d + qk), coef * pv * qv);
                    }
        c.set_column(j, std::move(col));
    }
    return c;
}

Tensor build_theta2_hopf(const TsdObject& D, const TrilinearForm& a) {
    if (!is_cocommutative(D)) throw std::invalid_argument("ribbon constructions need a cocommutative object");
    const int d = D.dim, o = D.order;
    const auto D6 = sweedler(D.delta, d, 6);
    Tensor th(o, {d, d}, {d, d});
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            SparseVec col;
            for (const auto& [xs, cx] : D6[x])
                for (const auto& [ys, cy] : D6[y]) {
                    const Scalar w = a.at(xs[0], xs[1], ys[1]) * a.at(ys[0], xs[2], ys[2]);
                    if (w.is_zero()) continue;
                    const Scalar coef = cx * cy * w;
                    const SparseVec& p = D.T.column(idx3d(d, xs[3], xs[4], ys[4]));
                    const SparseVec& q = D.T.column(idx3d(d, ys[3], xs[5], ys[5]));
                    for (const auto& [pk, pv] : p)
                        for (const auto& [qk, qv] : q)
                            accumulate(col, static_cast<std::uint32_t>(static_cast<std::size_t>(pk) * d + qk),
                                       coef * pv * qv);
                }
            th.set_column(static_cast<std::size_t>(x) * d + y, std::move(col));
        }
    return th;
}

Tensor build_c22_inverse_hopf(const TsdObject& D, const TrilinearForm& a) {
    if (!D.T_inv) throw std::invalid_argument("inverse braiding needs T_inv");
    if (!is_cocommutative(D)) throw std::invalid_argument("ribbon constructions need a cocommutative object");
    const auto beta = convolution_inverse(D, a);
    if (!beta) throw std::invalid_argument("cocycle is not convolution invertible");
    const int d = D.dim, o = D.order;
    const Tensor B = form_tensor(*beta);
    const Tensor& L = *D.T_inv;
    const auto D2 = sweedler(D.delta, d, 2);
    const auto D7 = sweedler(D.delta, d, 7);
    Tensor c(o, rep(d, 4), rep(d, 4));
    for (std::size_t j = 0; j < c.in_size(); ++j) {
        const auto t = tensor_tuple(rep(d, 4), j);  // (a, b, p, q)
        SparseVec col;
        for (const auto& [as, ca] : D7[t[0]])
            for (const auto& [bs, cb] : D7[t[1]]) {
                const SparseVec a2 = basis(as[1], o), b2 = basis(bs[1], o);
                const SparseVec a4 = basis(as[3], o), b4 = basis(bs[3], o);
                for (const auto& [ps, cp] : D2[t[2]])
                    for (const auto& [qs, cq] : D2[t[3]]) {
                        const SparseVec& lp = L.column(idx3d(d, ps[0], as[0], bs[0]));
                        const SparseVec& lq = L.column(idx3d(d, qs[0], as[2], bs[2]));
                        const Scalar w = scalar_part(eval(B, {&lp, &a2, &b2}), o) *
                                         scalar_part(eval(B, {&lq, &a4, &b4}), o);
                        if (w.is_zero()) continue;
                        const Scalar coef = ca * cb * cp * cq * w;
                        const SparseVec& p = L.column(idx3d(d, ps[1], as[4], bs[4]));
                        const SparseVec& q = L.column(idx3d(d, qs[1], as[5], bs[5]));
                        for (const auto& [pk, pv] : p)
                            for (const auto& [qk, qv] : q) {
                                const std::size_t out = ((static_cast<std::size_t>(pk) * d + qk) * d + as[6]) * d + bs[6];
                                accumulate(col, static_cast<std::uint32_t>(out), coef * pv * qv);
                            }
                    }
            }
        c.set_column(j, std::move(col));
    }
    return c;
}

BraidCheck check_braid_eq_dense(const TsdObject& D, const TrilinearForm& a) {
    const int d = D.dim, o = D.order;
    if (product(rep(d, 6)) > max_cells()) throw std::length_error("d^6 exceeds the cell limit");
    const Tensor c = build_c22_hopf(D, a);
    const Tensor I2 = Tensor::identity(o, {d, d});
    const Tensor I4 = Tensor::identity(o, rep(d, 4));
    const Tensor c1 = c.kron(I2), c2 = I2.kron(c);
    BraidCheck r;
    r.ybe = tensor_equal(c1.then(c2).then(c1), c2.then(c1).then(c2), "braid equation");
    if (D.T_inv) {
        const Tensor ci = build_c22_inverse_hopf(D, a);
        r.inverse = tensor_equal(c.then(ci), I4, "inverse after braiding");
        if (r.inverse.pass) r.inverse = tensor_equal(ci.then(c), I4, "braiding after inverse");
    } else {
        r.inverse.detail = "skipped: no T_inv";
    }
    const Tensor th = build_theta2_hopf(D, a);
    r.twist = tensor_equal(I2.kron(th).then(c), c.then(th.kron(I2)), "twist on the second pair");
    if (r.twist.pass) r.twist = tensor_equal(th.kron(I2).then(c), c.then(I2.kron(th)), "twist on the first pair");
    return r;
}

std::optional<std::size_t> compare_with_monomial(const Tensor& dense, const MonomialOperator& op) {
    if (op.dimension() != dense.in_size() || dense.out_size() != dense.in_size()) return std::size_t{0};
    const int L = static_cast<int>(lcm64(dense.order(), op.root_order()));
    for (std::size_t j = 0; j < op.dimension(); ++j) {
        const auto& col = dense.column(j);
        if (col.size() != 1 || col.begin()->first != op.target(j)) return j;
        if (col.begin()->second.lift(L) != to_rational(op.weight(j)).lift(L)) return j;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- integrals and Frobenius

namespace {

Scalar pair_with(const std::vector<Scalar>& gamma, const SparseVec& v, int order) {
    Scalar s = zero_of(order);
    for (const auto& [k, c] : v) s += gamma[k] * c;
    return s;
}

bool integrals_hold(const HopfData& h, const Integrals& in) {
    const int d = h.dim, o = h.order;
    for (int x = 0; x < d; ++x) {
        const SparseVec ex = basis(x, o);
        SparseVec want;
        const Scalar e = scalar_part(h.eps.column(x), o);
        for (const auto& [k, v] : in.lambda) accumulate(want, k, e * v);
        if (eval(h.mu, {&in.lambda, &ex}) != want) return false;
        SparseVec got;
        for (const auto& [key, v] : h.delta.column(x))
            accumulate(got, key % static_cast<std::uint32_t>(d), in.gamma[key / d] * v);
        SparseVec want2;
        for (const auto& [k, v] : h.eta.column(0)) accumulate(want2, k, in.gamma[x] * v);
        if (got != want2) return false;
    }
    return true;
}

}  // namespace

std::optional<Integrals> find_integrals(const HopfData& h) {
    const int d = h.dim, o = h.order;
    // lambda: sum_i l_i mu(e_i, e_x)_k - eps(x) l_k = 0
    std::vector<SparseVec> rows;
    for (int x = 0; x < d; ++x) {
        std::vector<SparseVec> block(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            for (const auto& [k, v] : h.mu.column(static_cast<std::size_t>(i) * d + x)) accumulate(block[k], i, v);
        const Scalar e = scalar_part(h.eps.column(x), o);
        for (int k = 0; k < d; ++k) accumulate(block[k], k, -e);
        for (auto& r : block) rows.push_back(std::move(r));
    }
    auto ln = nullspace(rows, d, o);
    // gamma: sum_{(a,b) in Delta x, b = k} c g_a - g_x eta_k = 0
    rows.clear();
    for (int x = 0; x < d; ++x) {
        std::vector<SparseVec> block(static_cast<std::size_t>(d));
        for (const auto& [key, v] : h.delta.column(x)) accumulate(block[key % d], key / d, v);
        for (const auto& [k, v] : h.eta.column(0)) accumulate(block[k], x, -v);
        for (auto& r : block) rows.push_back(std::move(r));
    }
    auto gn = nullspace(rows, d, o);
    if (ln.size() != 1 || gn.size() != 1) return std::nullopt;
    Integrals in;
    in.gamma = gn[0];
    Scalar g1 = pair_with(in.gamma, h.eta.column(0), o);
    if (g1.is_zero()) {
        for (const auto& g : in.gamma)
            if (!g.is_zero()) {
                g1 = g;
                break;
            }
    }
    const Scalar gi = inverse(g1);
    for (auto& g : in.gamma) g = g * gi;
    for (int i = 0; i < d; ++i) accumulate(in.lambda, i, ln[0][i]);
    const Scalar gl = pair_with(in.gamma, in.lambda, o);
    if (gl.is_zero()) return std::nullopt;
    const Scalar li = inverse(gl);
    for (auto& [k, v] : in.lambda) v = v * li;
    in.pairing = pair_with(in.gamma, in.lambda, o);
    Scalar el = zero_of(o);
    for (const auto& [k, v] : in.lambda) el += v * scalar_part(h.eps.column(k), o);
    in.classical_scale = el * pair_with(in.gamma, h.eta.column(0), o);
    return in;
}

FrobeniusReport frobenius_suite(const HopfData& h, const std::optional<Integrals>& given) {
    FrobeniusReport r;
    const int d = h.dim, o = h.order;
    auto note = [&](const std::string& what) {
        if (r.failure.empty()) r.failure = what;
    };
    std::optional<Integrals> in = given ? given : find_integrals(h);
    if (!in) {
        note("no integrals");
        return r;
    }
    r.integrals = integrals_hold(h, *in);
    if (!r.integrals) note("integral equations");
    r.normalization = pair_with(in->gamma, in->lambda, o) == one_of(o) &&
                      pair_with(in->gamma, h.antipode.apply(in->lambda), o) == one_of(o);
    if (!r.normalization) note("normalization");

    const Tensor I = Tensor::identity(o, {d});
    const Tensor I2 = Tensor::identity(o, {d, d});
    Tensor lam(o, {}, {d});
    lam.set_column(0, in->lambda);
    Tensor gam(o, {d}, {});
    for (int i = 0; i < d; ++i) gam.add(i, 0, in->gamma[i]);
    const Tensor cup = I.kron(h.antipode).then(h.mu).then(gam);
    const Tensor cap = lam.then(h.delta);

    // Frobenius structure with counit gamma and copairing (1 (x) S) Delta lambda.
    const Tensor capF = cap.then(I.kron(h.antipode));
    const Tensor deltaF = capF.kron(I).then(I.kron(h.mu));
    r.frobenius_axiom = h.mu.then(deltaF) == deltaF.kron(I).then(I.kron(h.mu)) &&
                        h.mu.then(deltaF) == I.kron(deltaF).then(h.mu.kron(I)) &&
                        deltaF.then(gam.kron(I)) == I && deltaF.then(I.kron(gam)) == I;
    if (!r.frobenius_axiom) note("Frobenius axiom");

    r.snake = cap.kron(I).then(I.kron(cup)) == I && I.kron(cap).then(cup.kron(I)) == I;
    if (!r.snake) note("snake identity");

    const auto v = validate_hopf(h);
    if (!v.pass || !v.involutory || !v.cocommutative) {
        note("braiding needs a cocommutative involutory Hopf algebra");
        return r;
    }
    const TsdObject heap = quantum_heap(h);
    const Tensor c = build_c22_hopf(heap, counit_form(heap));
    r.pairing_commutes = cup.kron(I2) == c.then(I2.kron(cup)) && c.then(cup.kron(I2)) == I2.kron(cup) &&
              I2.kron(cap).then(c) == cap.kron(I2) && cap.kron(I2).then(c) == I2.kron(cap);
    if (!r.pairing_commutes) note("pairing and braiding");

    const Tensor wcap = cap.then(I.kron(cap).kron(I));
    const Tensor wcup = I.kron(cup).kron(I).then(cup);
    const Tensor theta = wcap.kron(I2).then(I2.kron(c)).then(wcup.kron(I2));
    r.theta_commutes =
        I2.kron(theta).then(c) == c.then(theta.kron(I2)) && theta.kron(I2).then(c) == c.then(I2.kron(theta));
    if (!r.theta_commutes) note("twist and braiding");
    return r;
}

// ---------------------------------------------------------------- Lie coalgebras

LieAlgebra abelian_lie(int n) {
    LieAlgebra l;
    l.name = "abelian" + std::to_string(n);
    l.n = n;
    l.bracket.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
    return l;
}

LieAlgebra sl2_lie() {
    LieAlgebra l = abelian_lie(3);
    l.name = "sl2";
    // e = 0, f = 1, h = 2
    auto set = [&](int i, int j, int k, int v) {
        l.bracket[(static_cast<std::size_t>(i) * 3 + j) * 3 + k] = v;
        l.bracket[(static_cast<std::size_t>(j) * 3 + i) * 3 + k] = -v;
    };
    set(0, 1, 2, 1);
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
    return l;
}

namespace {

std::vector<Rational> lie_br(const LieAlgebra& l, const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int n = l.n;
    std::vector<Rational> r(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            for (int k = 0; k < n; ++k) r[k] += a[i] * b[j] * l.bracket[(static_cast<std::size_t>(i) * n + j) * n + k];
        }
    }
    return r;
}

std::vector<Rational> unit_vec(int n, int i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

CheckResult check_lie(const LieAlgebra& l) {
    const int n = l.n;
    CheckResult r;
    if (l.bracket.size() != static_cast<std::size_t>(n) * n * n) {
        r.pass = false;
        r.detail = "bracket has the wrong size";
        return r;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ++r.checked;
            if (lie_br(l, unit_vec(n, i), unit_vec(n, j)) != [&] {
                    auto v = lie_br(l, unit_vec(n, j), unit_vec(n, i));
                    for (auto& c : v) c = -c;
                    return v;
                }()) {
                r.pass = false;
                r.counterexample = {i, j};
                r.detail = "antisymmetry";
                return r;
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++r.checked;
                const auto a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
                auto s = lie_br(l, lie_br(l, a, b), c);
                const auto t = lie_br(l, lie_br(l, b, c), a);
                const auto u = lie_br(l, lie_br(l, c, a), b);
                for (int q = 0; q < n; ++q) s[q] += t[q] + u[q];
                for (const auto& v : s)
                    if (v != 0) {
                        r.pass = false;
                        r.counterexample = {i, j, k};
                        r.detail = "Jacobi identity";
                        return r;
                    }
            }
    r.total = r.checked;
    return r;
}

TsdObject lie_coalgebra(const LieAlgebra& l) {
    if (auto c = check_lie(l); !c.pass) throw std::invalid_argument("not a Lie algebra: " + c.detail);
    const int n = l.n, d = n + 1, o = 1;
    TsdObject t;
    t.name = "lie:" + l.name;
    t.dim = d;
    t.order = o;
    const Scalar one = one_of(o);
    // Basis: 0 = (1, 0), k + 1 = (0, e_k).
    t.delta = Tensor(o, {d}, {d, d});
    t.delta.add(0, 0, one);
    for (int k = 1; k < d; ++k) {
        t.delta.add(k, static_cast<std::size_t>(k) * d, one);
        t.delta.add(k, static_cast<std::size_t>(k), one);
    }
    t.eps = Tensor(o, {d}, {});
    t.eps.add(0, 0, one);
    t.eta = Tensor(o, {}, {d});
    t.eta->add(0, 0, one);
    t.T = Tensor(o, {d, d, d}, {d});
    auto put = [&](std::size_t col, const std::vector<Rational>& v) {
        for (int k = 0; k < n; ++k)
            if (v[k] != 0) t.T.add(col, k + 1, scalar(o, v[k]));
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const std::size_t col = idx3d(d, x, y, z);
                if (x == 0) {
                    if (y == 0 && z == 0) t.T.add(col, 0, one);
                    continue;
                }
                const auto ex = unit_vec(n, x - 1);
                if (y == 0 && z == 0)
                    put(col, ex);
                else if (z == 0)
                    put(col, lie_br(l, ex, unit_vec(n, y - 1)));
                else if (y == 0)
                    put(col, lie_br(l, ex, unit_vec(n, z - 1)));
                else
                    put(col, lie_br(l, lie_br(l, ex, unit_vec(n, y - 1)), unit_vec(n, z - 1)));
            }
    return t;
}

// ---------------------------------------------------------------- module systems

ModuleSystemReport module_compatible_system(const HopfData& h, const std::vector<ModuleData>& mods) {
    ModuleSystemReport r;
    const int dh = h.dim, o = h.order;
    const std::size_t q = mods.size();
    for (const auto& m : mods) r.sizes.push_back(m.dim);
    auto fail = [&](std::string what) {
        if (r.failure.empty()) r.failure = std::move(what);
        return r;
    };
    const Tensor IH = Tensor::identity(o, {dh});

    r.coalgebra_maps = true;
    for (std::size_t i = 0; i < q && r.coalgebra_maps; ++i) {
        const auto& m = mods[i];
        const int d = m.dim;
        const Tensor lhs = m.p.then(h.delta);
        const Tensor rhs =
            m.delta.kron(m.delta).then(Tensor::permutation(o, rep(d, 4), {0, 2, 1, 3})).then(m.p.kron(m.p));
        if (lhs != rhs || m.p.then(h.eps) != m.eps.kron(m.eps))
            return fail("p_" + std::to_string(i) + " is not a coalgebra map");
    }

    r.equivariant = true;
    for (std::size_t i = 0; i < q; ++i) {
        const auto& m = mods[i];
        const int d = m.dim;
        const Tensor Ix = Tensor::identity(o, {d});
        const Tensor lhs = Ix.kron(Ix).kron(h.delta)
                               .then(Tensor::permutation(o, {d, d, dh, dh}, {0, 2, 1, 3}))
                               .then(m.action.kron(m.action))
                               .then(m.p);
        const Tensor rhs = m.p.kron(h.delta)
                               .then(Tensor::permutation(o, {dh, dh, dh}, {1, 0, 2}))
                               .then(h.antipode.kron(IH).kron(IH))
                               .then(h.mu.kron(IH))
                               .then(h.mu);
        if (auto diff = lhs.first_difference(rhs)) {
            r.equivariant = false;
            auto t = tensor_tuple({d, d, dh}, *diff);
            return fail("equivariance fails at i=" + std::to_string(i) + " z=(" + std::to_string(t[0]) + "," +
                        std::to_string(t[1]) + ") h=" + std::to_string(t[2]));
        }
    }

    r.T.resize(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            r.T[i * q + j] = Tensor::identity(o, {mods[i].dim}).kron(mods[j].p).then(mods[i].action);

    r.compatible = true;
    for (std::size_t i = 0; i < q && r.compatible; ++i)
        for (std::size_t j = 0; j < q && r.compatible; ++j)
            for (std::size_t k = 0; k < q && r.compatible; ++k) {
                const int di = mods[i].dim, dj = mods[j].dim, dk = mods[k].dim;
                const Tensor& Tij = r.T[i * q + j];
                const Tensor& Tik = r.T[i * q + k];
                const Tensor& Tjk = r.T[j * q + k];
                const auto D3 = sweedler(mods[k].delta, dk, 3);
                const std::vector<int> dims{di, dj, dj, dk, dk};
                const std::size_t n = product(dims);
                auto hit = parallel_first(n, [&](std::size_t idx) -> std::optional<std::vector<int>> {
                    const auto t = tensor_tuple(dims, idx);
                    const SparseVec& inner = Tij.column((static_cast<std::size_t>(t[0]) * dj + t[1]) * dj + t[2]);
                    const SparseVec e1 = basis(t[3], o), e2 = basis(t[4], o);
                    const SparseVec lhs = eval(Tik, {&inner, &e1, &e2});
                    SparseVec rhs;
                    for (const auto& [as, ca] : D3[t[3]])
                        for (const auto& [bs, cb] : D3[t[4]]) {
                            const SparseVec& a = Tik.column((static_cast<std::size_t>(t[0]) * dk + as[0]) * dk + bs[0]);
                            const SparseVec& b = Tjk.column((static_cast<std::size_t>(t[1]) * dk + as[1]) * dk + bs[1]);
                            const SparseVec& c = Tjk.column((static_cast<std::size_t>(t[2]) * dk + as[2]) * dk + bs[2]);
                            for (const auto& [key, v] : eval(Tij, {&a, &b, &c})) accumulate(rhs, key, ca * cb * v);
                        }
                    if (lhs != rhs) return t;
                    return std::nullopt;
                });
                if (hit) {
                    r.compatible = false;
                    return fail("mixed distributivity fails for (i,j,k)=(" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
                }
            }
    return r;
}

std::vector<ModuleData> augmented_cyclic_modules(int n, const std::vector<int>& ms) {
    const int o = 1;
    const Scalar one = one_of(o);
    std::vector<ModuleData> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const int d = n * ms[i];
        ModuleData m;
        m.name = "Z" + std::to_string(d);
        m.dim = d;
        m.delta = Tensor(o, {d}, {d, d});
        m.eps = Tensor(o, {d}, {});
        m.action = Tensor(o, {d, n}, {d});
        m.p = Tensor(o, {d, d}, {n});
        for (int a = 0; a < d; ++a) {
            m.delta.add(a, static_cast<std::size_t>(a) * d + a, one);
            m.eps.add(a, 0, one);
            for (int k = 0; k < n; ++k)
                m.action.add(static_cast<std::size_t>(a) * n + k, static_cast<std::size_t>(mod_floor(a + ms[i] * k, d)),
                             one);
            for (int b = 0; b < d; ++b)
                m.p.add(static_cast<std::size_t>(a) * d + b, static_cast<std::size_t>(mod_floor(b - a, n)), one);
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace tsdq
