#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsdq/coeffs.hpp"
#include "tsdq/parallel.hpp"
#include "tsdq/smith.hpp"
#include "tsdq/tsd.hpp"

namespace tsdq {

// f: X^arity -> A, stored as values[tuple_index * rank + factor].
template <int Arity>
struct Cochain {
    TernaryStructure structure;
    AbelianGroup coeffs;
    std::vector<std::int64_t> values;

    Cochain() = default;
    Cochain(TernaryStructure s, AbelianGroup a) : structure(std::move(s)), coeffs(std::move(a)) {
        values.assign(cells() * coeffs.rank(), 0);
    }

    std::size_t cells() const {
        std::size_t n = 1;
        for (int k = 0; k < Arity; ++k) n *= static_cast<std::size_t>(structure.m);
        return n;
    }
    std::size_t rank() const { return coeffs.rank(); }
    const std::int64_t* at(std::size_t index) const { return values.data() + index * rank(); }
    std::int64_t* at(std::size_t index) { return values.data() + index * rank(); }
    AbelianGroup::Element value(std::size_t index) const { return {at(index), at(index) + rank()}; }
    void set(std::size_t index, const AbelianGroup::Element& a) {
        auto r = coeffs.reduce(a);
        std::copy(r.begin(), r.end(), at(index));
    }
    bool is_zero() const {
        for (auto v : values)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const Cochain& o) const { return coeffs == o.coeffs && values == o.values; }
};

using Cochain1 = Cochain<1>;
using Cochain2 = Cochain<3>;
using Cochain3 = Cochain<5>;

inline std::size_t idx3(int m, int x, int y, int z) { return (static_cast<std::size_t>(x) * m + y) * m + z; }

Cochain2 delta1(const Cochain1& f);
Cochain3 delta2(const Cochain2& psi);
Cochain2 cochain_add(const Cochain2& a, const Cochain2& b);
Cochain2 cochain_sub(const Cochain2& a, const Cochain2& b);
// Indicator of a single triple with value `a`.
Cochain2 characteristic(const TernaryStructure& s, const AbelianGroup& coeffs, int x, int y, int z,
                        AbelianGroup::Element a = {});

// Counterexample is the first (x,y,z,u,v) with nonzero delta2.
CheckResult check_cocycle2(const Cochain2& psi);

struct CoboundaryResult {
    bool is_coboundary = false;
    std::optional<Cochain1> witness;  // delta1(witness) == psi when present
};
CoboundaryResult is_coboundary2(const Cochain2& psi);

struct H2Report {
    AbelianGroup coeffs;
    int free_rank = 0;
    std::vector<std::int64_t> torsion;   // sorted invariant orders > 1
    std::vector<std::int64_t> orders;    // per representative; 0 means infinite order
    std::vector<Cochain2> basis;

    std::string group_string() const;
};

// Throws std::length_error when m^8 exceeds max_cells().
H2Report compute_H2(const TernaryStructure& s, const AbelianGroup& coeffs);

// Matrix of the n-th boundary: rows are (2n+1)-tuples, columns (2n-1)-tuples,
// both lexicographic. n in {1,2,3}.
IntMatrix boundary_map(const TernaryStructure& s, int n);

// phi_i(a,b,c) = [c - b = i] on the heap of Z_m, A = Z.
Cochain2 phi_i_cocycle(int m, int i);
// Over the heap of D3 with A = Z3.
Cochain2 d3_psi_cocycle();
// The six pairs (y,z) of the D3 cochain, by element name.
const std::vector<std::pair<std::string, std::string>>& d3_psi_pairs();

// ---------------------------------------------------------------- systems

struct SystemCocycle {
    CompatibleSystem system;
    AbelianGroup coeffs;
    std::vector<std::vector<std::int64_t>> values;  // [i*q + j][idx * rank + c]

    SystemCocycle() = default;
    SystemCocycle(CompatibleSystem c, AbelianGroup a);

    std::size_t rank() const { return coeffs.rank(); }
    std::size_t index(int, int j, int x, int y, int z) const {
        const int mj = system.sizes[j];
        return (static_cast<std::size_t>(x) * mj + y) * mj + z;
    }
    const std::int64_t* at(int i, int j, int x, int y, int z) const {
        return values[static_cast<std::size_t>(i) * system.q() + j].data() + index(i, j, x, y, z) * rank();
    }
    std::int64_t* at(int i, int j, int x, int y, int z) {
        return values[static_cast<std::size_t>(i) * system.q() + j].data() + index(i, j, x, y, z) * rank();
    }
    Cochain2 diagonal(int i) const;
};

// Counterexample layout: (i, j, k, x, y, z, u, v).
CheckResult check_system_cocycle(const SystemCocycle& a, const Budget& budget = {});

// f[i] is a map X_i -> A given as values[x * rank + c].
SystemCocycle system_coboundary(const CompatibleSystem& c, const AbelianGroup& coeffs,
                                const std::vector<std::vector<std::int64_t>>& f);

struct SystemTrivialityResult {
    bool trivial = false;
    std::vector<std::vector<std::int64_t>> witness;
};
SystemTrivialityResult is_system_trivial(const SystemCocycle& a);

// alpha_ij(x, y1, y2) = [y1 == y2] in Z_2 on the augmented cyclic system.
SystemCocycle augmented_indicator_cocycle(const CompatibleSystem& c);

struct NosakaReport {
    SystemCocycle cocycle;               // on the admissible indices only
    std::vector<int> admissible;         // group indices h with 1 - h invertible
    std::vector<int> excluded;           // group indices with det(1 - h) = 0
    std::uint64_t nonzero_values = 0;
};

// Nosaka's G-family cocycle lambda(g) det(x - y, (1 - h)^-1 y) on the
// SL(2,Z3) Alexander family, turned into a system cocycle.
NosakaReport nosaka_system_cocycle(const GFamily& family, const CompatibleSystem& full_system);
int nosaka_lambda(int group_index);
int nosaka_alpha(int x, int g, int y, int h);  // values in Z3; throws if 1 - h is singular

}  // namespace tsdq
