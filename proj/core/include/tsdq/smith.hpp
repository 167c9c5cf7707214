#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tsdq {

// Dense integer matrix, row-major. Arithmetic is overflow-checked.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::int64_t* row(std::size_t r) const { return a_.data() + r * cols_; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
    IntMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

enum SmithTrack : unsigned { kTrackNone = 0, kTrackRows = 1, kTrackCols = 2, kTrackBoth = 3 };

// R * A * C = diag(d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... and d_i > 0.
struct SmithForm {
    std::vector<std::int64_t> diagonal;
    IntMatrix R, Rinv, C, Cinv;  // filled according to the tracking flags

    std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(IntMatrix a, unsigned track = kTrackNone);

// Incremental integer row reduction. The stored rows span the same lattice as
// the inserted rows (every step is unimodular), optionally carrying a
// right-hand side reduced mod `modulus` (0 = over Z).
class RowEchelon {
public:
    RowEchelon(std::size_t cols, std::int64_t modulus = 0);

    // False when the row reduces to 0 = rhs != 0.
    bool insert(std::vector<std::int64_t> row, std::int64_t rhs = 0);
    bool consistent() const { return consistent_; }
    std::int64_t modulus() const { return modulus_; }
    std::size_t rank() const { return count_; }
    IntMatrix matrix() const;
    std::vector<std::int64_t> rhs() const;

private:
    std::size_t cols_;
    std::int64_t modulus_;
    bool consistent_ = true;
    std::size_t count_ = 0;
    std::vector<std::vector<std::int64_t>> pivot_rows_;  // indexed by pivot column
    std::vector<std::int64_t> pivot_rhs_;
};

// Any solution of the reduced system, or nullopt when there is none.
std::optional<std::vector<std::int64_t>> solve_echelon(const RowEchelon& e);

// Solves A x = b over Z (modulus 0) or A x = b mod modulus.
std::optional<std::vector<std::int64_t>> solve_linear(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                      std::int64_t modulus);

// Extended gcd: returns g >= 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t);

}  // namespace tsdq
