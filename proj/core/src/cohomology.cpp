#include "tsdq/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tsdq/system_check.hpp"

namespace tsdq {

namespace {

std::size_t ipow(std::size_t m, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= m;
    return r;
}

void require_same(const Cochain2& a, const Cochain2& b) {
    if (a.coeffs != b.coeffs || a.structure.m != b.structure.m || a.structure.table != b.structure.table)
        throw std::invalid_argument("cochains live over different data");
}

}  // namespace

Cochain2 delta1(const Cochain1& f) {
    const auto& s = f.structure;
    const int m = s.m;
    Cochain2 out(s, f.coeffs);
    const std::size_t rk = f.rank();
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                auto* o = out.at(idx3(m, x, y, z));
                const auto* fx = f.at(x);
                const auto* ft = f.at(s.T(x, y, z));
                for (std::size_t c = 0; c < rk; ++c) o[c] = f.coeffs.reduce_coord(c, fx[c] - ft[c]);
            }
    return out;
}

Cochain3 delta2(const Cochain2& psi) {
    const auto& s = psi.structure;
    const int m = s.m;
    Cochain3 out(s, psi.coeffs);
    const std::size_t rk = psi.rank();
    std::size_t n = 0;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int u = 0; u < m; ++u)
                    for (int v = 0; v < m; ++v, ++n) {
                        const auto* a = psi.at(idx3(m, x, y, z));
                        const auto* b = psi.at(idx3(m, s.T(x, u, v), s.T(y, u, v), s.T(z, u, v)));
                        const auto* c = psi.at(idx3(m, x, u, v));
                        const auto* d = psi.at(idx3(m, s.T(x, y, z), u, v));
                        auto* o = out.at(n);
                        for (std::size_t k = 0; k < rk; ++k)
                            o[k] = psi.coeffs.reduce_coord(k, a[k] - b[k] - c[k] + d[k]);
                    }
    return out;
}

Cochain2 cochain_add(const Cochain2& a, const Cochain2& b) {
    require_same(a, b);
    Cochain2 r = a;
    for (std::size_t i = 0; i < r.cells(); ++i)
        for (std::size_t c = 0; c < r.rank(); ++c)
            r.at(i)[c] = r.coeffs.reduce_coord(c, detail::add_checked(a.at(i)[c], b.at(i)[c]));
    return r;
}

Cochain2 cochain_sub(const Cochain2& a, const Cochain2& b) {
    require_same(a, b);
    Cochain2 r = a;
    for (std::size_t i = 0; i < r.cells(); ++i)
        for (std::size_t c = 0; c < r.rank(); ++c)
            r.at(i)[c] = r.coeffs.reduce_coord(c, detail::sub_checked(a.at(i)[c], b.at(i)[c]));
    return r;
}

Cochain2 characteristic(const TernaryStructure& s, const AbelianGroup& coeffs, int x, int y, int z,
                        AbelianGroup::Element a) {
    Cochain2 c(s, coeffs);
    if (a.empty()) a.assign(coeffs.rank(), 1);
    c.set(idx3(s.m, x, y, z), a);
    return c;
}

CheckResult check_cocycle2(const Cochain2& psi) {
    const auto& s = psi.structure;
    const int m = s.m;
    const std::size_t rk = psi.rank();
    CheckResult r;
    r.total = ipow(m, 5);
    auto found = parallel_first(m, [&](std::size_t xi) -> std::optional<std::vector<int>> {
        const int x = static_cast<int>(xi);
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int u = 0; u < m; ++u)
                    for (int v = 0; v < m; ++v) {
                        const auto* a = psi.at(idx3(m, x, y, z));
                        const auto* b = psi.at(idx3(m, s.T(x, u, v), s.T(y, u, v), s.T(z, u, v)));
                        const auto* c = psi.at(idx3(m, x, u, v));
                        const auto* d = psi.at(idx3(m, s.T(x, y, z), u, v));
                        for (std::size_t k = 0; k < rk; ++k)
                            if (psi.coeffs.reduce_coord(k, a[k] - b[k] - c[k] + d[k]) != 0)
                                return std::vector<int>{x, y, z, u, v};
                    }
        return std::nullopt;
    });
    if (found) {
        r.pass = false;
        r.counterexample = found->second;
        r.detail = "2-cocycle condition fails";
    } else {
        r.checked = r.total;
    }
    return r;
}

CoboundaryResult is_coboundary2(const Cochain2& psi) {
    const auto& s = psi.structure;
    const int m = s.m;
    const std::size_t N = psi.cells();
    Cochain1 f(s, psi.coeffs);
    for (std::size_t c = 0; c < psi.rank(); ++c) {
        const std::int64_t k = psi.coeffs.factors()[c];
        if (k == 1) continue;
        RowEchelon ech(m, k);
        std::vector<std::int64_t> row(m);
        for (std::size_t t = 0; t < N; ++t) {
            const int x = static_cast<int>(t / (m * m));
            const int y = static_cast<int>(t / m % m), z = static_cast<int>(t % m);
            std::fill(row.begin(), row.end(), 0);
            row[x] += 1;
            row[s.T(x, y, z)] -= 1;
            if (!ech.insert(row, psi.at(t)[c])) return {};
        }
        auto sol = solve_echelon(ech);
        if (!sol) return {};
        for (int x = 0; x < m; ++x) f.at(x)[c] = psi.coeffs.reduce_coord(c, (*sol)[x]);
    }
    if (!(delta1(f) == psi)) throw std::logic_error("coboundary witness does not reproduce the cochain");
    return {true, std::move(f)};
}

std::string H2Report::group_string() const {
    std::vector<std::int64_t> f = torsion;
    for (int r = 0; r < free_rank; ++r) f.push_back(0);
    return AbelianGroup(f).to_string();
}

H2Report compute_H2(const TernaryStructure& s, const AbelianGroup& coeffs) {
    const int m = s.m;
    const std::size_t N = ipow(m, 3);
    if (ipow(m, 8) > max_cells()) throw std::length_error("H2 computation exceeds TSD_MAX_CELLS");

    // Lattice spanned by the rows of the delta2 matrix.
    RowEchelon lattice(N);
    std::vector<std::int64_t> row(N);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int u = 0; u < m; ++u)
                    for (int v = 0; v < m; ++v) {
                        std::fill(row.begin(), row.end(), 0);
                        row[idx3(m, x, y, z)] += 1;
                        row[idx3(m, s.T(x, u, v), s.T(y, u, v), s.T(z, u, v))] -= 1;
                        row[idx3(m, x, u, v)] -= 1;
                        row[idx3(m, s.T(x, y, z), u, v)] += 1;
                        lattice.insert(row);
                    }
    const SmithForm F = lattice.rank() ? smith_normal_form(lattice.matrix(), kTrackCols)
                                       : SmithForm{{}, {}, {}, IntMatrix::identity(N), IntMatrix::identity(N)};
    const std::size_t r = F.rank();

    IntMatrix D1(N, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                D1(idx3(m, x, y, z), x) += 1;
                D1(idx3(m, x, y, z), s.T(x, y, z)) -= 1;
            }
    const IntMatrix Y = F.Cinv * D1;
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j < m; ++j)
            if (Y(i, j) != 0) throw std::logic_error("coboundaries are not cocycles");
    IntMatrix B(N - r, m);
    for (std::size_t i = r; i < N; ++i)
        for (int j = 0; j < m; ++j) B(i - r, j) = Y(i, j);
    const SmithForm G = smith_normal_form(B, kTrackRows);

    H2Report rep;
    rep.coeffs = coeffs;
    auto emit = [&](std::size_t factor, const std::vector<std::int64_t>& y, std::int64_t order) {
        auto psi_vals = F.C.apply(y);
        Cochain2 rep_cochain(s, coeffs);
        for (std::size_t t = 0; t < N; ++t) rep_cochain.at(t)[factor] = coeffs.reduce_coord(factor, psi_vals[t]);
        rep.basis.push_back(std::move(rep_cochain));
        rep.orders.push_back(order);
        if (order == 0)
            ++rep.free_rank;
        else
            rep.torsion.push_back(order);
    };
    for (std::size_t c = 0; c < coeffs.rank(); ++c) {
        const std::int64_t k = coeffs.factors()[c];
        if (k == 1) continue;
        if (k > 0) {
            for (std::size_t i = 0; i < r; ++i) {
                const std::int64_t g = std::gcd(F.diagonal[i], k);
                if (g <= 1) continue;
                std::vector<std::int64_t> y(N, 0);
                y[i] = k / g;
                emit(c, y, g);
            }
        }
        for (std::size_t j = 0; j < N - r; ++j) {
            const std::int64_t e = j < G.rank() ? G.diagonal[j] : 0;
            const std::int64_t order = k > 0 ? std::gcd(e, k) : e;
            if (order == 1) continue;
            std::vector<std::int64_t> y(N, 0);
            for (std::size_t i = 0; i < N - r; ++i) y[r + i] = G.Rinv(i, j);
            emit(c, y, order);
        }
    }
    std::sort(rep.torsion.begin(), rep.torsion.end());
    return rep;
}

IntMatrix boundary_map(const TernaryStructure& s, int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("boundary degree must be 1, 2 or 3");
    const int m = s.m;
    const int len = 2 * n + 1;
    const std::size_t rows = ipow(m, len), cols = ipow(m, len - 2);
    if (rows * cols > max_cells()) throw std::length_error("boundary matrix exceeds TSD_MAX_CELLS");
    IntMatrix B(rows, cols);
    std::vector<int> t(len), out(len - 2);
    auto encode = [m](const std::vector<int>& v) {
        std::size_t k = 0;
        for (int e : v) k = k * m + e;
        return k;
    };
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t rem = r;
        for (int p = len - 1; p >= 0; --p) {
            t[p] = static_cast<int>(rem % m);
            rem /= m;
        }
        for (int i = 1; i <= n; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            // zero-based positions of x_{2i}, x_{2i+1}
            const int a = 2 * i - 1, b = 2 * i;
            std::size_t o = 0;
            for (int p = 0; p < len; ++p)
                if (p != a && p != b) out[o++] = t[p];
            B(r, encode(out)) += sign;
            o = 0;
            for (int p = 0; p < len; ++p) {
                if (p == a || p == b) continue;
                out[o++] = p < a ? s.T(t[p], t[a], t[b]) : t[p];
            }
            B(r, encode(out)) -= sign;
        }
    }
    return B;
}

Cochain2 phi_i_cocycle(int m, int i) {
    if (m < 1 || i < 0 || i >= m) throw std::invalid_argument("phi_i needs 0 <= i < m");
    Cochain2 c(heap_of_group(cyclic_group(m)), AbelianGroup::integers());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int z = 0; z < m; ++z)
                if (mod_floor(z - b, m) == i) c.at(idx3(m, a, b, z))[0] = 1;
    return c;
}

const std::vector<std::pair<std::string, std::string>>& d3_psi_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs{
        {"1", "r"}, {"r", "r2"}, {"r2", "1"}, {"s", "sr"}, {"sr", "sr2"}, {"sr2", "s"}};
    return pairs;
}

Cochain2 d3_psi_cocycle() {
    const FiniteGroup g = dihedral3();
    Cochain2 c(heap_of_group(g), AbelianGroup::cyclic(3));
    for (const auto& [yn, zn] : d3_psi_pairs()) {
        const int y = g.index_of(yn), z = g.index_of(zn);
        for (int x = 0; x < 6; ++x) c.at(idx3(6, x, y, z))[0] = 1;
    }
    return c;
}

// ------------------------------------------------------------------ systems

SystemCocycle::SystemCocycle(CompatibleSystem c, AbelianGroup a) : system(std::move(c)), coeffs(std::move(a)) {
    const int q = system.q();
    values.resize(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            values[static_cast<std::size_t>(i) * q + j].assign(
                static_cast<std::size_t>(system.sizes[i]) * system.sizes[j] * system.sizes[j] * coeffs.rank(), 0);
}

Cochain2 SystemCocycle::diagonal(int i) const {
    Cochain2 c(system.diagonal(i), coeffs);
    c.values = values[static_cast<std::size_t>(i) * system.q() + i];
    return c;
}

CheckResult check_system_cocycle(const SystemCocycle& a, const Budget& budget) {
    const auto& c = a.system;
    const std::size_t rk = a.rank();
    auto holds = [&](int i, int j, int k, int x, int y, int z, int u, int v) {
        const auto* p = a.at(i, j, x, y, z);
        const auto* q = a.at(i, k, c.T(i, j, x, y, z), u, v);
        const auto* r = a.at(i, k, x, u, v);
        const auto* s = a.at(i, j, c.T(i, k, x, u, v), c.T(j, k, y, u, v), c.T(j, k, z, u, v));
        for (std::size_t f = 0; f < rk; ++f)
            if (a.coeffs.reduce_coord(f, p[f] + q[f] - r[f] - s[f]) != 0) return false;
        return true;
    };
    return detail::check_system_identity(c.sizes, budget, holds, "system 2-cocycle condition fails");
}

SystemCocycle system_coboundary(const CompatibleSystem& c, const AbelianGroup& coeffs,
                                const std::vector<std::vector<std::int64_t>>& f) {
    const int q = c.q();
    if (static_cast<int>(f.size()) != q) throw std::invalid_argument("one 1-cochain per index required");
    const std::size_t rk = coeffs.rank();
    for (int i = 0; i < q; ++i)
        if (f[i].size() != static_cast<std::size_t>(c.sizes[i]) * rk)
            throw std::invalid_argument("1-cochain has the wrong length");
    SystemCocycle out(c, coeffs);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            for (int x = 0; x < c.sizes[i]; ++x)
                for (int y = 0; y < c.sizes[j]; ++y)
                    for (int z = 0; z < c.sizes[j]; ++z) {
                        const int t = c.T(i, j, x, y, z);
                        auto* o = out.at(i, j, x, y, z);
                        for (std::size_t k = 0; k < rk; ++k)
                            o[k] = coeffs.reduce_coord(k, f[i][x * rk + k] - f[i][t * rk + k]);
                    }
    return out;
}

SystemTrivialityResult is_system_trivial(const SystemCocycle& a) {
    const auto& c = a.system;
    const int q = c.q();
    const std::size_t rk = a.rank();
    std::vector<std::size_t> offset(q + 1, 0);
    for (int i = 0; i < q; ++i) offset[i + 1] = offset[i] + c.sizes[i];
    const std::size_t cols = offset[q];

    SystemTrivialityResult res;
    res.witness.resize(q);
    for (int i = 0; i < q; ++i) res.witness[i].assign(static_cast<std::size_t>(c.sizes[i]) * rk, 0);

    std::vector<std::int64_t> row(cols);
    for (std::size_t f = 0; f < rk; ++f) {
        const std::int64_t k = a.coeffs.factors()[f];
        if (k == 1) continue;
        RowEchelon ech(cols, k);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                for (int x = 0; x < c.sizes[i]; ++x)
                    for (int y = 0; y < c.sizes[j]; ++y)
                        for (int z = 0; z < c.sizes[j]; ++z) {
                            std::fill(row.begin(), row.end(), 0);
                            row[offset[i] + x] += 1;
                            row[offset[i] + c.T(i, j, x, y, z)] -= 1;
                            if (!ech.insert(row, a.at(i, j, x, y, z)[f])) return {};
                        }
        auto sol = solve_echelon(ech);
        if (!sol) return {};
        for (int i = 0; i < q; ++i)
            for (int x = 0; x < c.sizes[i]; ++x)
                res.witness[i][x * rk + f] = a.coeffs.reduce_coord(f, (*sol)[offset[i] + x]);
    }
    const SystemCocycle back = system_coboundary(c, a.coeffs, res.witness);
    if (back.values != a.values) throw std::logic_error("system coboundary witness does not reproduce the cocycle");
    res.trivial = true;
    return res;
}

SystemCocycle augmented_indicator_cocycle(const CompatibleSystem& c) {
    SystemCocycle a(c, AbelianGroup::integers());
    const int q = c.q();
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            for (int x = 0; x < c.sizes[i]; ++x)
                for (int y = 0; y < c.sizes[j]; ++y) a.at(i, j, x, y, y)[0] = 1;
    return a;
}

// ------------------------------------------------------------------ Nosaka

namespace {

struct Mat2 {
    int a, b, c, d;
};

Mat2 entries(int group_index) {
    auto e = sl2_z3_entries(group_index);
    return {e[0], e[1], e[2], e[3]};
}

int det_one_minus(const Mat2& h) { return static_cast<int>(mod_floor((1 - h.a) * (1 - h.d) - h.b * h.c, 3)); }

}  // namespace

int nosaka_lambda(int group_index) {
    const Mat2 g = entries(group_index);
    return static_cast<int>(mod_floor((g.a + g.d) * (g.b - g.c) * (1 - g.b * g.c), 3));
}

int nosaka_alpha(int x, int g, int y, int h) {
    const Mat2 H = entries(h);
    const int det = det_one_minus(H);
    if (det == 0) throw std::domain_error("1 - h is singular");
    const int inv_det = det;  // 1 and 2 are their own inverses mod 3
    // (1 - h)^-1 = det^-1 [[1 - d, b], [c, 1 - a]]
    const int y0 = y / 3, y1 = y % 3;
    const int w0 = static_cast<int>(mod_floor(inv_det * ((1 - H.d) * y0 + H.b * y1), 3));
    const int w1 = static_cast<int>(mod_floor(inv_det * (H.c * y0 + (1 - H.a) * y1), 3));
    const int u0 = x / 3 - y0, u1 = x % 3 - y1;
    return static_cast<int>(mod_floor(nosaka_lambda(g) * (u0 * w1 - u1 * w0), 3));
}

NosakaReport nosaka_system_cocycle(const GFamily& family, const CompatibleSystem& full) {
    if (family.group.order != full.q() || family.m != 9)
        throw std::invalid_argument("expected the SL(2,Z3) family on Z3^2 and its system");
    NosakaReport rep;
    for (int h = 0; h < family.group.order; ++h)
        (det_one_minus(entries(h)) == 0 ? rep.excluded : rep.admissible).push_back(h);
    CompatibleSystem sys = restrict_system(full, rep.admissible);
    rep.cocycle = SystemCocycle(sys, AbelianGroup::cyclic(3));
    const int e = family.group.identity;
    const int q = sys.q();
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            const int g = rep.admissible[i], h = rep.admissible[j];
            for (int x = 0; x < 9; ++x)
                for (int y = 0; y < 9; ++y)
                    for (int z = 0; z < 9; ++z) {
                        const int v = nosaka_alpha(x, e, y, g) + nosaka_alpha(family.op(g, x, y), e, z, h);
                        const int r = v % 3;
                        rep.cocycle.at(i, j, x, y, z)[0] = r;
                        if (r != 0) ++rep.nonzero_values;
                    }
        }
    return rep;
}

}  // namespace tsdq
