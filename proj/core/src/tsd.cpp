#include "tsdq/tsd.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tsdq/coeffs.hpp"
#include "tsdq/system_check.hpp"

namespace tsdq {

// ------------------------------------------------------------------ groups

int FiniteGroup::index_of(const std::string& element_name) const {
    for (int i = 0; i < order; ++i)
        if (names[i] == element_name) return i;
    throw std::invalid_argument("no element named " + element_name + " in " + name);
}

FiniteGroup make_group(std::string name, int order, std::vector<int> mul, std::vector<std::string> names) {
    if (order < 1 || mul.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("group table has wrong size");
    for (int v : mul)
        if (v < 0 || v >= order) throw std::invalid_argument("group table entry out of range");
    FiniteGroup g;
    g.name = std::move(name);
    g.order = order;
    g.mul = std::move(mul);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g(g(a, b), c) != g(a, g(b, c))) throw std::invalid_argument("group table not associative");
    int e = -1;
    for (int a = 0; a < order && e < 0; ++a) {
        bool unit = true;
        for (int b = 0; b < order && unit; ++b) unit = g(a, b) == b && g(b, a) == b;
        if (unit) e = a;
    }
    if (e < 0) throw std::invalid_argument("group table has no identity");
    g.identity = e;
    g.inv.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (g(a, b) == e && g(b, a) == e) g.inv[a] = b;
    for (int a = 0; a < order; ++a)
        if (g.inv[a] < 0) throw std::invalid_argument("group element without inverse");
    if (names.empty())
        for (int a = 0; a < order; ++a) names.push_back(std::to_string(a));
    if (names.size() != static_cast<std::size_t>(order)) throw std::invalid_argument("wrong number of element names");
    g.names = std::move(names);
    return g;
}

FiniteGroup trivial_group() { return make_group("1", 1, {0}, {"e"}); }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    return make_group("Z" + std::to_string(n), n, std::move(mul));
}

FiniteGroup dihedral3() {
    std::vector<int> mul(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int f1 = a / 3, k1 = a % 3, f2 = b / 3, k2 = b % 3;
            int f = (f1 + f2) % 2;
            int k = mod_floor((f2 ? -k1 : k1) + k2, 3);
            mul[a * 6 + b] = 3 * f + k;
        }
    return make_group("D3", 6, std::move(mul), {"1", "r", "r2", "s", "sr2", "sr"});
}

FiniteGroup symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> mul(36);
    std::vector<std::string> names;
    for (int a = 0; a < 6; ++a) {
        names.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
            mul[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return make_group("S3", 6, std::move(mul), std::move(names));
}

namespace {

std::vector<std::array<int, 4>> sl2_elements() {
    std::vector<std::array<int, 4>> els;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if (mod_floor(a * d - b * c, 3) == 1) els.push_back({a, b, c, d});
    return els;
}

}  // namespace

std::array<int, 4> sl2_z3_entries(int index) {
    static const auto els = sl2_elements();
    return els.at(index);
}

FiniteGroup sl2_z3() {
    auto els = sl2_elements();
    const int n = static_cast<int>(els.size());
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        const auto& x = els[i];
        names.push_back("[[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "],[" + std::to_string(x[2]) + "," +
                        std::to_string(x[3]) + "]]");
        for (int j = 0; j < n; ++j) {
            const auto& y = els[j];
            std::array<int, 4> p{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                                 (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
            mul[i * n + j] = static_cast<int>(std::find(els.begin(), els.end(), p) - els.begin());
        }
    }
    return make_group("SL2Z3", n, std::move(mul), std::move(names));
}

// -------------------------------------------------------------- structures

TernaryStructure TernaryStructure::from_function(std::string name, int m, const std::function<int(int, int, int)>& f) {
    if (m < 1 || m > 255) throw std::invalid_argument("carrier size must be in [1,255]");
    TernaryStructure s;
    s.name = std::move(name);
    s.m = m;
    s.table.resize(static_cast<std::size_t>(m) * m * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                int v = f(x, y, z);
                if (v < 0 || v >= m) throw std::invalid_argument("ternary operation value out of range");
                s.table[(static_cast<std::size_t>(x) * m + y) * m + z] = static_cast<std::uint8_t>(v);
            }
    return s;
}

BinaryQuandle BinaryQuandle::from_function(std::string name, int m, const std::function<int(int, int)>& f) {
    if (m < 1 || m > 255) throw std::invalid_argument("carrier size must be in [1,255]");
    BinaryQuandle q;
    q.name = std::move(name);
    q.m = m;
    q.table.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int v = f(x, y);
            if (v < 0 || v >= m) throw std::invalid_argument("binary operation value out of range");
            q.table[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint8_t>(v);
        }
    return q;
}

CheckResult check_tsd(const TernaryStructure& s) {
    const int m = s.m;
    CheckResult r;
    r.total = static_cast<std::uint64_t>(m) * m * m * m * m;
    auto found = parallel_first(m, [&](std::size_t xi) -> std::optional<std::vector<int>> {
        const int x = static_cast<int>(xi);
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                const int txyz = s.T(x, y, z);
                for (int u = 0; u < m; ++u)
                    for (int v = 0; v < m; ++v)
                        if (s.T(txyz, u, v) != s.T(s.T(x, u, v), s.T(y, u, v), s.T(z, u, v)))
                            return std::vector<int>{x, y, z, u, v};
            }
        return std::nullopt;
    });
    if (found) {
        r.pass = false;
        r.counterexample = found->second;
        r.checked = 0;
        r.detail = "ternary self-distributivity fails";
    } else {
        r.checked = r.total;
    }
    return r;
}

CheckResult check_rack(TernaryStructure& s) {
    const int m = s.m;
    CheckResult r;
    r.total = static_cast<std::uint64_t>(m) * m;
    std::vector<std::uint8_t> inv(s.table.size());
    for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
            std::vector<int> pre(m, -1);
            for (int x = 0; x < m; ++x) {
                int t = s.T(x, y, z);
                if (pre[t] >= 0) {
                    r.pass = false;
                    r.counterexample = {y, z, pre[t], x};
                    r.detail = "T(-,y,z) not injective";
                    return r;
                }
                pre[t] = x;
            }
            for (int t = 0; t < m; ++t) inv[(static_cast<std::size_t>(t) * m + y) * m + z] = static_cast<std::uint8_t>(pre[t]);
            ++r.checked;
        }
    s.left_inverse = std::move(inv);
    return r;
}

TernaryStructure heap_of_group(const FiniteGroup& g) {
    auto s = TernaryStructure::from_function("heap:" + g.name, g.order,
                                             [&](int x, int y, int z) { return g(g(x, g.inv[y]), z); });
    check_rack(s);
    return s;
}

TernaryStructure compose_binary(const BinaryQuandle& q) {
    auto s = TernaryStructure::from_function("compose:" + q.name, q.m,
                                             [&](int x, int y, int z) { return q.op(q.op(x, y), z); });
    TernaryStructure probe = s;
    if (check_rack(probe)) s.left_inverse = std::move(probe.left_inverse);
    return s;
}

CheckResult check_binary_sd(const BinaryQuandle& q) {
    const int m = q.m;
    CheckResult r;
    r.total = static_cast<std::uint64_t>(m) * m * m;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z))) {
                    r.pass = false;
                    r.counterexample = {x, y, z};
                    r.detail = "binary self-distributivity fails";
                    return r;
                }
                ++r.checked;
            }
    return r;
}

bool right_translations_bijective(const BinaryQuandle& q) {
    for (int y = 0; y < q.m; ++y) {
        std::vector<bool> seen(q.m, false);
        for (int x = 0; x < q.m; ++x) {
            int v = q.op(x, y);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

bool is_idempotent(const BinaryQuandle& q) {
    for (int x = 0; x < q.m; ++x)
        if (q.op(x, x) != x) return false;
    return true;
}

BinaryQuandle trivial_quandle(int m) {
    return BinaryQuandle::from_function("trivial" + std::to_string(m), m, [](int x, int) { return x; });
}

BinaryQuandle dihedral_quandle(int n) {
    return BinaryQuandle::from_function("dihedral:Z" + std::to_string(n), n,
                                        [n](int x, int y) { return mod_floor(2 * y - x, n); });
}

BinaryQuandle conjugation_quandle(const FiniteGroup& g) {
    return BinaryQuandle::from_function("conj:" + g.name, g.order, [&](int x, int y) { return g(g(g.inv[y], x), y); });
}

// ---------------------------------------------------------------- families

CheckResult gfamily_check(const GFamily& f) {
    const int m = f.m, n = f.group.order;
    CheckResult r;
    r.total = static_cast<std::uint64_t>(m) * m * n * n + static_cast<std::uint64_t>(m) * m * m * n * n +
              static_cast<std::uint64_t>(m) * m;
    const int e = f.group.identity;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (f.op(e, x, y) != x) {
                r.pass = false;
                r.counterexample = {x, y};
                r.detail = "x *^e y != x";
                return r;
            }
            ++r.checked;
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    if (f.op(h, f.op(g, x, y), y) != f.op(f.group(g, h), x, y)) {
                        r.pass = false;
                        r.counterexample = {g, h, x, y};
                        r.detail = "(x *^g y) *^h y != x *^{gh} y";
                        return r;
                    }
                    ++r.checked;
                }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int conj = f.group(f.group(f.group.inv[h], g), h);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    for (int z = 0; z < m; ++z) {
                        if (f.op(h, f.op(g, x, y), z) != f.op(conj, f.op(h, x, z), f.op(h, y, z))) {
                            r.pass = false;
                            r.counterexample = {g, h, x, y, z};
                            r.detail = "(x *^g y) *^h z != (x *^h z) *^{h^-1 g h} (y *^h z)";
                            return r;
                        }
                        ++r.checked;
                    }
        }
    return r;
}

GFamily trivial_gfamily(int m, const FiniteGroup& g) {
    GFamily f;
    f.name = "trivial-gfamily";
    f.m = m;
    f.group = g;
    f.ops.assign(g.order, std::vector<std::uint8_t>(static_cast<std::size_t>(m) * m));
    for (int h = 0; h < g.order; ++h)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) f.ops[h][x * m + y] = static_cast<std::uint8_t>(x);
    return f;
}

GFamily alexander_gfamily_sl2z3() {
    GFamily f;
    f.name = "alexander-gfamily:SL2Z3";
    f.m = 9;
    f.group = sl2_z3();
    f.ops.assign(f.group.order, std::vector<std::uint8_t>(81));
    for (int g = 0; g < f.group.order; ++g) {
        auto a = sl2_z3_entries(g);
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) {
                int x0 = x / 3, x1 = x % 3, y0 = y / 3, y1 = y % 3;
                // y + (x - y) g on row vectors
                int d0 = x0 - y0, d1 = x1 - y1;
                int r0 = mod_floor(y0 + d0 * a[0] + d1 * a[2], 3);
                int r1 = mod_floor(y1 + d0 * a[1] + d1 * a[3], 3);
                f.ops[g][x * 9 + y] = static_cast<std::uint8_t>(3 * r0 + r1);
            }
    }
    return f;
}

GFamily dihedral_z2_family(int n) {
    GFamily f;
    f.name = "dihedral-gfamily:Z" + std::to_string(n);
    f.m = n;
    f.group = cyclic_group(2);
    f.ops.assign(2, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            f.ops[0][x * n + y] = static_cast<std::uint8_t>(x);
            f.ops[1][x * n + y] = static_cast<std::uint8_t>(mod_floor(2 * y - x, n));
        }
    return f;
}

// ---------------------------------------------------------------- systems

TernaryStructure CompatibleSystem::diagonal(int i) const {
    TernaryStructure s;
    s.name = name + "[" + std::to_string(i) + "]";
    s.m = sizes[i];
    s.table = tables[static_cast<std::size_t>(i) * sizes.size() + i];
    return s;
}

CheckResult check_compatible_system(const CompatibleSystem& c, const Budget& budget) {
    auto holds = [&c](int i, int j, int k, int x, int y, int z, int u, int v) {
        return c.T(i, k, c.T(i, j, x, y, z), u, v) ==
               c.T(i, j, c.T(i, k, x, u, v), c.T(j, k, y, u, v), c.T(j, k, z, u, v));
    };
    return detail::check_system_identity(c.sizes, budget, holds, "mixed distributivity fails");
}

CompatibleSystem single_system(const TernaryStructure& s) {
    CompatibleSystem c;
    c.name = "single:" + s.name;
    c.sizes = {s.m};
    c.tables = {s.table};
    c.labels = {s.name};
    return c;
}

CompatibleSystem mutually_distributive_system(const TernaryStructure& t0, const TernaryStructure& t1) {
    if (t0.m != t1.m) throw std::invalid_argument("mutually distributive pair needs a common carrier");
    CompatibleSystem c;
    c.name = "mutual:" + t0.name + "," + t1.name;
    c.sizes = {t0.m, t0.m};
    c.tables = {t0.table, t1.table, t0.table, t1.table};
    c.labels = {"0", "1"};
    return c;
}

CompatibleSystem restrict_system(const CompatibleSystem& c, const std::vector<int>& indices) {
    CompatibleSystem r;
    r.name = c.name + "|restricted";
    const std::size_t q = c.sizes.size();
    for (int i : indices) {
        r.sizes.push_back(c.sizes.at(i));
        r.labels.push_back(c.labels.empty() ? std::to_string(i) : c.labels[i]);
    }
    for (int i : indices)
        for (int j : indices) r.tables.push_back(c.tables[i * q + j]);
    return r;
}

namespace {

CompatibleSystem gfamily_system(const GFamily& f, bool literal) {
    const int n = f.group.order, m = f.m;
    CompatibleSystem c;
    c.name = f.name + (literal ? "|literal" : "|variant");
    c.sizes.assign(n, m);
    c.labels = f.group.names;
    c.tables.resize(static_cast<std::size_t>(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int a = literal ? h : g;
            auto& t = c.tables[g * n + h];
            t.resize(static_cast<std::size_t>(m) * m * m);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    for (int z = 0; z < m; ++z)
                        t[(x * m + y) * m + z] = static_cast<std::uint8_t>(f.op(f.group.inv[a], f.op(a, x, y), z));
        }
    return c;
}

}  // namespace

GFamilyCompatibleReport gfamily_to_compatible(const GFamily& f, const Budget& budget, bool evaluate_both) {
    GFamilyCompatibleReport rep;
    rep.literal = gfamily_system(f, true);
    rep.literal_check = check_compatible_system(rep.literal, budget);
    if (!rep.literal_check.pass || evaluate_both) {
        rep.variant = gfamily_system(f, false);
        rep.variant_check = check_compatible_system(rep.variant, budget);
        rep.variant_evaluated = true;
    }
    if (rep.literal_check.pass)
        rep.chosen = "literal";
    else if (rep.variant_check.pass)
        rep.chosen = "variant";
    else
        throw std::runtime_error("neither G-family formula yields a compatible system");
    return rep;
}

CompatibleSystem augmented_cyclic_system(int n, int m1, int m2, DiagonalRule rule) {
    if (n < 1 || m1 < 1 || m2 < 1) throw std::invalid_argument("parameters must be positive");
    if (std::gcd(m1, m2) != 1) throw std::invalid_argument("gcd(m1, m2) must be 1");
    const std::array<int, 2> mult{m1, m2};
    const std::array<int, 2> size{n * m1, n * m2};
    if (size[0] > 255 || size[1] > 255) throw std::invalid_argument("carrier too large");
    CompatibleSystem c;
    c.name = "augmented:" + std::to_string(n) + "," + std::to_string(m1) + "," + std::to_string(m2);
    c.sizes = {size[0], size[1]};
    c.labels = {"G" + std::to_string(size[0]), "G" + std::to_string(size[1])};
    c.tables.resize(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const int mi = size[i], mj = size[j];
            auto& t = c.tables[i * 2 + j];
            t.resize(static_cast<std::size_t>(mi) * mj * mj);
            for (int x = 0; x < mi; ++x)
                for (int s1 = 0; s1 < mj; ++s1)
                    for (int s2 = 0; s2 < mj; ++s2) {
                        int v;
                        if (i == j && rule == DiagonalRule::Heap) {
                            v = mod_floor(x - s1 + s2, mi);
                        } else {
                            const int p = mod_floor(s2 - s1, n);  // p_j(y^s1, y^s2) = x^(s2 - s1)
                            v = mod_floor(x + mult[i] * p, mi);
                        }
                        t[(static_cast<std::size_t>(x) * mj + s1) * mj + s2] = static_cast<std::uint8_t>(v);
                    }
        }
    return c;
}

CheckResult augmented_equivariance(int n, int m1, int m2) {
    if (std::gcd(m1, m2) != 1) throw std::invalid_argument("gcd(m1, m2) must be 1");
    const std::array<int, 2> mult{m1, m2};
    CheckResult r;
    for (int i = 0; i < 2; ++i) {
        const int mi = n * mult[i];
        for (int k1 = 0; k1 < mi; ++k1)
            for (int k2 = 0; k2 < mi; ++k2)
                for (int h = 0; h < n; ++h) {
                    ++r.total;
                    // z . Delta(x^h) acts diagonally on both tensor factors
                    const int a1 = mod_floor(k1 + mult[i] * h, mi), a2 = mod_floor(k2 + mult[i] * h, mi);
                    const int lhs = mod_floor(a2 - a1, n);
                    const int rhs = mod_floor(-h + (k2 - k1) + h, n);
                    if (lhs != rhs) {
                        r.pass = false;
                        r.counterexample = {i, k1, k2, h};
                        r.detail = "equivariance fails";
                        return r;
                    }
                    ++r.checked;
                }
    }
    return r;
}

}  // namespace tsdq
