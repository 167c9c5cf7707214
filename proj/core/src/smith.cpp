#include "tsdq/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "tsdq/coeffs.hpp"

namespace tsdq {

using detail::add_checked;
using detail::mul_checked;
using detail::sub_checked;

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not match");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) = add_checked(r(i, j), mul_checked(a, o(k, j)));
        }
    return r;
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match");
    std::vector<std::int64_t> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) r[i] = add_checked(r[i], mul_checked((*this)(i, j), v[j]));
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t r = a - q * b;
        a = b;
        b = r;
        std::int64_t ns = sub_checked(s0, mul_checked(q, s1));
        std::int64_t nt = sub_checked(t0, mul_checked(q, t1));
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

namespace {

struct SmithWork {
    IntMatrix& A;
    SmithForm& F;
    bool rows, cols;

    void row_addmul(std::size_t i, std::size_t t, std::int64_t q) {  // row_i -= q row_t
        if (q == 0) return;
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (A(t, c)) A(i, c) = sub_checked(A(i, c), mul_checked(q, A(t, c)));
        if (rows) {
            for (std::size_t c = 0; c < F.R.cols(); ++c)
                if (F.R(t, c)) F.R(i, c) = sub_checked(F.R(i, c), mul_checked(q, F.R(t, c)));
            for (std::size_t r = 0; r < F.Rinv.rows(); ++r)
                if (F.Rinv(r, i)) F.Rinv(r, t) = add_checked(F.Rinv(r, t), mul_checked(q, F.Rinv(r, i)));
        }
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
        if (rows) {
            for (std::size_t c = 0; c < F.R.cols(); ++c) std::swap(F.R(i, c), F.R(j, c));
            for (std::size_t r = 0; r < F.Rinv.rows(); ++r) std::swap(F.Rinv(r, i), F.Rinv(r, j));
        }
    }
    void row_neg(std::size_t i) {
        for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
        if (rows) {
            for (std::size_t c = 0; c < F.R.cols(); ++c) F.R(i, c) = -F.R(i, c);
            for (std::size_t r = 0; r < F.Rinv.rows(); ++r) F.Rinv(r, i) = -F.Rinv(r, i);
        }
    }
    void col_addmul(std::size_t j, std::size_t t, std::int64_t q) {  // col_j -= q col_t
        if (q == 0) return;
        for (std::size_t r = 0; r < A.rows(); ++r)
            if (A(r, t)) A(r, j) = sub_checked(A(r, j), mul_checked(q, A(r, t)));
        if (cols) {
            for (std::size_t r = 0; r < F.C.rows(); ++r)
                if (F.C(r, t)) F.C(r, j) = sub_checked(F.C(r, j), mul_checked(q, F.C(r, t)));
            for (std::size_t c = 0; c < F.Cinv.cols(); ++c)
                if (F.Cinv(j, c)) F.Cinv(t, c) = add_checked(F.Cinv(t, c), mul_checked(q, F.Cinv(j, c)));
        }
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
        if (cols) {
            for (std::size_t r = 0; r < F.C.rows(); ++r) std::swap(F.C(r, i), F.C(r, j));
            for (std::size_t c = 0; c < F.Cinv.cols(); ++c) std::swap(F.Cinv(i, c), F.Cinv(j, c));
        }
    }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix A, unsigned track) {
    SmithForm F;
    const std::size_t m = A.rows(), n = A.cols();
    const bool rows = track & kTrackRows, cols = track & kTrackCols;
    if (rows) F.R = F.Rinv = IntMatrix::identity(m);
    if (cols) F.C = F.Cinv = IntMatrix::identity(n);
    SmithWork w{A, F, rows, cols};

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi = m, pj = n;
        std::int64_t best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                std::int64_t v = std::llabs(A(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (best == 1) goto found;
                }
            }
    found:
        if (best == 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (A(i, t) != 0) {
                    w.row_addmul(i, t, A(i, t) / A(t, t));
                    if (A(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (A(t, j) != 0) {
                    w.col_addmul(j, t, A(t, j) / A(t, t));
                    if (A(t, j) != 0) clean = false;
                }
            if (!clean) {
                std::size_t bi = t, bj = t;
                std::int64_t b = std::llabs(A(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (A(i, t) != 0 && std::llabs(A(i, t)) < b) b = std::llabs(A(i, t)), bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(t, j) != 0 && std::llabs(A(t, j)) < b) b = std::llabs(A(t, j)), bi = t, bj = j;
                w.row_swap(t, bi);
                w.col_swap(t, bj);
                continue;
            }
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            w.row_addmul(t, bad, -1);
        }
        if (A(t, t) < 0) w.row_neg(t);
        F.diagonal.push_back(A(t, t));
    }
    return F;
}

// ------------------------------------------------------------------ echelon

RowEchelon::RowEchelon(std::size_t cols, std::int64_t modulus)
    : cols_(cols), modulus_(modulus), pivot_rows_(cols), pivot_rhs_(cols, 0) {
    if (modulus < 0) throw std::invalid_argument("negative modulus");
}

bool RowEchelon::insert(std::vector<std::int64_t> row, std::int64_t rhs) {
    if (row.size() != cols_) throw std::invalid_argument("row length does not match");
    auto red = [&](std::int64_t v) { return modulus_ ? mod_floor(v, modulus_) : v; };
    rhs = red(rhs);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        auto& P = pivot_rows_[c];
        if (P.empty()) {
            if (row[c] < 0) {
                for (std::size_t k = c; k < cols_; ++k) row[k] = -row[k];
                rhs = red(-rhs);
            }
            P = std::move(row);
            pivot_rhs_[c] = rhs;
            ++count_;
            return true;
        }
        const std::int64_t a = P[c], b = row[c];
        if (b % a == 0) {
            const std::int64_t q = b / a;
            for (std::size_t k = c; k < cols_; ++k)
                if (P[k]) row[k] = sub_checked(row[k], mul_checked(q, P[k]));
            rhs = red(sub_checked(rhs, mul_checked(q, pivot_rhs_[c])));
        } else {
            std::int64_t s, t;
            const std::int64_t g = ext_gcd(a, b, s, t);
            const std::int64_t ag = a / g, bg = b / g;
            std::vector<std::int64_t> np(cols_, 0);
            for (std::size_t k = c; k < cols_; ++k) {
                np[k] = add_checked(mul_checked(s, P[k]), mul_checked(t, row[k]));
                row[k] = sub_checked(mul_checked(ag, row[k]), mul_checked(bg, P[k]));
            }
            const std::int64_t npr = red(add_checked(mul_checked(s, pivot_rhs_[c]), mul_checked(t, rhs)));
            rhs = red(sub_checked(mul_checked(ag, rhs), mul_checked(bg, pivot_rhs_[c])));
            P = std::move(np);
            pivot_rhs_[c] = npr;
        }
    }
    if (rhs != 0) {
        consistent_ = false;
        return false;
    }
    return true;
}

IntMatrix RowEchelon::matrix() const {
    IntMatrix m(count_, cols_);
    std::size_t r = 0;
    for (const auto& p : pivot_rows_) {
        if (p.empty()) continue;
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = p[c];
        ++r;
    }
    return m;
}

std::vector<std::int64_t> RowEchelon::rhs() const {
    std::vector<std::int64_t> v;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!pivot_rows_[c].empty()) v.push_back(pivot_rhs_[c]);
    return v;
}

namespace {

// d y = c (mod k), k = 0 meaning over Z.
std::optional<std::int64_t> solve_scalar(std::int64_t d, std::int64_t c, std::int64_t k) {
    if (k == 0) {
        if (c % d != 0) return std::nullopt;
        return c / d;
    }
    c = mod_floor(c, k);
    std::int64_t s, t;
    const std::int64_t g = ext_gcd(mod_floor(d, k), k, s, t);
    if (c % g != 0) return std::nullopt;
    const std::int64_t kg = k / g;
    return mod_floor(mul_checked(mod_floor(c / g, kg), mod_floor(s, kg)), kg);
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_echelon(const RowEchelon& ech) {
    if (!ech.consistent()) return std::nullopt;
    const std::int64_t modulus = ech.modulus();
    const IntMatrix E = ech.matrix();
    const auto e = ech.rhs();
    std::vector<std::int64_t> x(E.cols(), 0);
    if (E.rows() > 0) {
        SmithForm F = smith_normal_form(E, kTrackBoth);
        const auto Re = F.R.apply(e);
        std::vector<std::int64_t> y(E.cols(), 0);
        for (std::size_t i = 0; i < F.rank(); ++i) {
            auto yi = solve_scalar(F.diagonal[i], Re[i], modulus);
            if (!yi) return std::nullopt;
            y[i] = *yi;
        }
        for (std::size_t i = F.rank(); i < Re.size(); ++i) {
            const std::int64_t v = modulus ? mod_floor(Re[i], modulus) : Re[i];
            if (v != 0) return std::nullopt;
        }
        x = F.C.apply(y);
    }
    if (modulus)
        for (auto& v : x) v = mod_floor(v, modulus);
    return x;
}

std::optional<std::vector<std::int64_t>> solve_linear(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                      std::int64_t modulus) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match");
    RowEchelon ech(a.cols(), modulus);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<std::int64_t> row(a.row(r), a.row(r) + a.cols());
        if (!ech.insert(std::move(row), b[r])) return std::nullopt;
    }
    auto x = solve_echelon(ech);
    if (!x) return x;
    const auto check = a.apply(*x);
    for (std::size_t r = 0; r < check.size(); ++r) {
        const std::int64_t diff = sub_checked(check[r], b[r]);
        if (modulus ? mod_floor(diff, modulus) != 0 : diff != 0)
            throw std::logic_error("linear solve produced a wrong solution");
    }
    return x;
}

}  // namespace tsdq
