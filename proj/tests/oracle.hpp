#pragma once

// Brute-force reference computations. Only plain std types here; nothing
// calls into the library, so agreement with it is a real cross-check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Ternary = std::function<int(int, int, int)>;

inline long mod(long a, long m) { return ((a % m) + m) % m; }

inline cd zeta(int n, long k) {
    const double pi = std::acos(-1.0);
    return std::polar(1.0, 2.0 * pi * static_cast<double>(mod(k, n)) / n);
}

// Value of sum c_j zeta_n^j.
template <class Coords>
cd eval(const Coords& c, int n) {
    cd s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) s += static_cast<double>(c[j]) * zeta(n, static_cast<long>(j));
    return s;
}

inline bool near(cd a, cd b) { return std::abs(a - b) < 1e-7 * (1.0 + std::abs(a) + std::abs(b)); }

// Remainder of p modulo a monic polynomial, lowest degree first.
inline std::vector<long> poly_rem(std::vector<long> p, const std::vector<long>& monic) {
    const std::size_t d = monic.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        const long lead = p[k];
        if (!lead) continue;
        for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= lead * monic[j];
    }
    p.resize(d);
    return p;
}

// Exact quotient of p by a monic divisor.
inline std::vector<long> poly_div(std::vector<long> p, const std::vector<long>& monic) {
    const std::size_t d = monic.size() - 1;
    std::vector<long> q(p.size() - d, 0);
    for (std::size_t k = p.size(); k-- > d;) {
        const long lead = p[k];
        q[k - d] = lead;
        for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= lead * monic[j];
    }
    return q;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
inline std::vector<long> cyclotomic(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div(p, cyclotomic(d));
    return p;
}

inline int totient(int n) {
    int c = 0;
    for (int k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

inline bool is_tsd(int m, const Ternary& T) {
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int u = 0; u < m; ++u)
                    for (int v = 0; v < m; ++v)
                        if (T(T(x, y, z), u, v) != T(T(x, u, v), T(y, u, v), T(z, u, v))) return false;
    return true;
}

// Rank over F_p by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<long>> a, long p) {
    int rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && mod(a[piv][c], p) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        long inv = 1;
        const long lead = mod(a[rank][c], p);
        while (mod(inv * lead, p) != 1) ++inv;
        for (auto& v : a[rank]) v = mod(v * inv, p);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || mod(a[r][c], p) == 0) continue;
            const long f = mod(a[r][c], p);
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = mod(a[r][k] - f * a[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

// Coboundary matrix on 1-cochains: rows (x,y,z), columns x.
inline std::vector<std::vector<long>> delta1_matrix(int m, const Ternary& T) {
    std::vector<std::vector<long>> d(static_cast<std::size_t>(m) * m * m, std::vector<long>(m, 0));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                auto& row = d[(x * m + y) * m + z];
                row[x] += 1;
                row[T(x, y, z)] -= 1;
            }
    return d;
}

// Coboundary matrix on 2-cochains: rows (x,y,z,u,v), columns (x,y,z).
inline std::vector<std::vector<long>> delta2_matrix(int m, const Ternary& T) {
    const int m3 = m * m * m;
    auto id = [m](int x, int y, int z) { return (x * m + y) * m + z; };
    std::vector<std::vector<long>> d(static_cast<std::size_t>(m3) * m * m, std::vector<long>(m3, 0));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int u = 0; u < m; ++u)
                    for (int v = 0; v < m; ++v) {
                        auto& row = d[((static_cast<std::size_t>(id(x, y, z)) * m) + u) * m + v];
                        row[id(x, y, z)] += 1;
                        row[id(T(x, y, z), u, v)] += 1;
                        row[id(x, u, v)] -= 1;
                        row[id(T(x, u, v), T(y, u, v), T(z, u, v))] -= 1;
                    }
    return d;
}

inline std::vector<std::vector<long>> transpose(const std::vector<std::vector<long>>& a) {
    std::vector<std::vector<long>> t(a.empty() ? 0 : a[0].size(), std::vector<long>(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c) t[c][r] = a[r][c];
    return t;
}

// dim H^2 with coefficients in the field F_p.
inline int h2_dim_mod_p(int m, const Ternary& T, long p) {
    const int cells = m * m * m;
    const int z2 = cells - rank_mod_p(delta2_matrix(m, T), p);
    const int b2 = rank_mod_p(delta1_matrix(m, T), p);
    return z2 - b2;
}

// Whether psi (length m^3) lies in the image of delta1 over F_p.
inline bool is_coboundary_mod_p(int m, const Ternary& T, const std::vector<long>& psi, long p) {
    auto d = delta1_matrix(m, T);
    const int r = rank_mod_p(d, p);
    for (std::size_t k = 0; k < d.size(); ++k) d[k].push_back(psi[k]);
    return rank_mod_p(d, p) == r;
}

// Integer coboundaries of a rack have vanishing column sums: x -> T(x,y,z)
// permutes X, so sum_x f(x) - f(T(x,y,z)) = 0.
inline bool passes_rack_sum_obstruction(int m, const std::vector<long>& psi) {
    for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
            long s = 0;
            for (int x = 0; x < m; ++x) s += psi[(x * m + y) * m + z];
            if (s != 0) return false;
        }
    return true;
}

// Heap of Z_m with phi_i and chi(g) = zeta_m.
struct CyclicHeap {
    int m, i;
    int T(int x, int y, int z) const { return static_cast<int>(mod(x - y + z, m)); }
    int phi(int, int y, int z) const { return mod(z - y, m) == i ? 1 : 0; }
};

// Trace of theta^n over the doubled strand: fixed (x,y) weighted by zeta^(sum of weights).
inline cd unknot_trace(const CyclicHeap& h, int n) {
    cd s = 0;
    for (int x0 = 0; x0 < h.m; ++x0)
        for (int y0 = 0; y0 < h.m; ++y0) {
            int x = x0, y = y0;
            long e = 0;
            for (int k = 0; k < n; ++k) {
                e += h.phi(x, x, y) + h.phi(y, x, y);
                const int nx = h.T(x, x, y), ny = h.T(y, x, y);
                x = nx;
                y = ny;
            }
            if (x == x0 && y == y0) s += zeta(h.m, e);
        }
    return s;
}

// Trace of c^k on two doubled strands: the left pair passes under the right.
inline cd crossing_power_trace(const CyclicHeap& h, int k) {
    const int m = h.m;
    cd s = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    int l1 = a, l2 = b, r1 = c, r2 = d;
                    long e = 0;
                    for (int t = 0; t < k; ++t) {
                        e += h.phi(l1, r1, r2) + h.phi(l2, r1, r2);
                        const int n1 = h.T(l1, r1, r2), n2 = h.T(l2, r1, r2);
                        l1 = r1;
                        l2 = r2;
                        r1 = n1;
                        r2 = n2;
                    }
                    if (l1 == a && l2 == b && r1 == c && r2 == d) s += zeta(m, e);
                }
    return s;
}

}  // namespace oracle
