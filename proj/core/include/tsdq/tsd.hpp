#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tsdq/parallel.hpp"

namespace tsdq {

struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> mul;  // mul[a * order + b] = a * b
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> names;

    int operator()(int a, int b) const { return mul[a * order + b]; }
    int index_of(const std::string& element_name) const;
};

// Validates associativity, identity and inverses; fills identity and inv.
FiniteGroup make_group(std::string name, int order, std::vector<int> mul, std::vector<std::string> names = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
// Elements s^f r^k with r s = s r^-1, stored at index 3f + k. Element names
// follow the right-action reading of words, so "sr" is r*s = s r^2.
FiniteGroup dihedral3();
// Permutations of {0,1,2} in lexicographic one-line order, (a*b)(i) = a(b(i)).
FiniteGroup symmetric3();
// det-1 matrices over Z3, lexicographic in (a,b,c,d).
FiniteGroup sl2_z3();
std::array<int, 4> sl2_z3_entries(int index);

struct TernaryStructure {
    std::string name;
    int m = 0;
    std::vector<std::uint8_t> table;         // T(x,y,z) at (x*m + y)*m + z
    std::vector<std::uint8_t> left_inverse;  // empty unless a rack

    int T(int x, int y, int z) const { return table[(static_cast<std::size_t>(x) * m + y) * m + z]; }
    int L(int x, int y, int z) const { return left_inverse[(static_cast<std::size_t>(x) * m + y) * m + z]; }
    bool has_left_inverse() const { return !left_inverse.empty(); }

    static TernaryStructure from_function(std::string name, int m, const std::function<int(int, int, int)>& f);
};

struct BinaryQuandle {
    std::string name;
    int m = 0;
    std::vector<std::uint8_t> table;  // x*y at x*m + y

    int op(int x, int y) const { return table[static_cast<std::size_t>(x) * m + y]; }
    static BinaryQuandle from_function(std::string name, int m, const std::function<int(int, int)>& f);
};

CheckResult check_tsd(const TernaryStructure& s);
// On success stores the inverse of every x -> T(x,y,z).
CheckResult check_rack(TernaryStructure& s);

TernaryStructure heap_of_group(const FiniteGroup& g);
TernaryStructure compose_binary(const BinaryQuandle& q);

CheckResult check_binary_sd(const BinaryQuandle& q);
bool right_translations_bijective(const BinaryQuandle& q);
bool is_idempotent(const BinaryQuandle& q);

BinaryQuandle trivial_quandle(int m);
BinaryQuandle dihedral_quandle(int n);
// x*y = y^-1 x y
BinaryQuandle conjugation_quandle(const FiniteGroup& g);

struct GFamily {
    std::string name;
    int m = 0;
    FiniteGroup group;
    std::vector<std::vector<std::uint8_t>> ops;  // ops[g][x*m + y] = x *^g y

    int op(int g, int x, int y) const { return ops[g][static_cast<std::size_t>(x) * m + y]; }
};

CheckResult gfamily_check(const GFamily& f);
GFamily trivial_gfamily(int m, const FiniteGroup& g);
// x *^g y = x g + y (1 - g) on row vectors of Z3^2, x stored as 3*x0 + x1.
GFamily alexander_gfamily_sl2z3();
// Z2 acting on Z_n: identity op for the unit, 2y - x for the generator.
GFamily dihedral_z2_family(int n);

struct CompatibleSystem {
    std::string name;
    std::vector<int> sizes;
    std::vector<std::vector<std::uint8_t>> tables;  // tables[i*q + j][(x*m_j + y)*m_j + z]
    std::vector<std::string> labels;

    int q() const { return static_cast<int>(sizes.size()); }
    int T(int i, int j, int x, int y, int z) const {
        const int mj = sizes[j];
        return tables[static_cast<std::size_t>(i) * sizes.size() + j][(static_cast<std::size_t>(x) * mj + y) * mj + z];
    }
    TernaryStructure diagonal(int i) const;
};

// Counterexample layout: (i, j, k, x, y, z, u, v).
CheckResult check_compatible_system(const CompatibleSystem& c, const Budget& budget = {});

CompatibleSystem single_system(const TernaryStructure& s);
// T_ij = T_j on a common carrier.
CompatibleSystem mutually_distributive_system(const TernaryStructure& t0, const TernaryStructure& t1);
CompatibleSystem restrict_system(const CompatibleSystem& c, const std::vector<int>& indices);

struct GFamilyCompatibleReport {
    CompatibleSystem literal;    // T_gh(x,y,z) = (x *^h y) *^{h^-1} z
    CheckResult literal_check;
    CompatibleSystem variant;    // T_gh(x,y,z) = (x *^g y) *^{g^-1} z
    CheckResult variant_check;
    bool variant_evaluated = false;
    std::string chosen;  // "literal" or "variant"

    const CompatibleSystem& system() const { return chosen == "variant" ? variant : literal; }
};

// Throws std::runtime_error when neither formula passes.
GFamilyCompatibleReport gfamily_to_compatible(const GFamily& f, const Budget& budget = {}, bool evaluate_both = false);

enum class DiagonalRule { Action, Heap };

// Carriers G_{n m1}, G_{n m2}; T_ij(x, y1, y2) = x . p_j(y1, y2) with G_n acting on
// G_{n m_i} through x^k -> y_i^{m_i k}. DiagonalRule::Heap replaces T_ii by the heap.
CompatibleSystem augmented_cyclic_system(int n, int m1, int m2, DiagonalRule rule = DiagonalRule::Action);
// p_i(z . Delta(h)) = S(h1) p_i(z) h2 on grouplikes, all i, z, h.
CheckResult augmented_equivariance(int n, int m1, int m2);

}  // namespace tsdq
