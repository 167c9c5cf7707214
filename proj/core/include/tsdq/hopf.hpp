#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsdq/coeffs.hpp"
#include "tsdq/cohomology.hpp"
#include "tsdq/parallel.hpp"
#include "tsdq/quantum.hpp"
#include "tsdq/tsd.hpp"

namespace tsdq {

// Exact scalars in Q(zeta_order); order 1 is Q.
using Scalar = CyclotomicQ;

Scalar scalar(int order, const Rational& v);
Scalar zeta_scalar(int order, std::int64_t k);

// Sparse vector over a tensor power, keyed by lexicographic index.
using SparseVec = std::map<std::uint32_t, Scalar>;

// Linear map between tensor products of spaces with the given dimensions.
// An empty dimension list stands for the ground field.
class Tensor {
public:
    Tensor() = default;
    Tensor(int order, std::vector<int> in_dims, std::vector<int> out_dims);

    static Tensor identity(int order, const std::vector<int>& dims);
    // Output factor k is input factor perm[k].
    static Tensor permutation(int order, const std::vector<int>& dims, const std::vector<int>& perm);

    int order() const { return order_; }
    const std::vector<int>& in_dims() const { return in_; }
    const std::vector<int>& out_dims() const { return out_; }
    std::size_t in_size() const { return cols_.size(); }
    std::size_t out_size() const;

    const SparseVec& column(std::size_t j) const { return cols_[j]; }
    void add(std::size_t j, std::size_t i, const Scalar& v);
    void set_column(std::size_t j, SparseVec v);

    // next o this
    Tensor then(const Tensor& next) const;
    // this (x) other
    Tensor kron(const Tensor& other) const;
    SparseVec apply(const SparseVec& v) const;

    std::optional<std::size_t> first_difference(const Tensor& o) const;
    bool operator==(const Tensor& o) const { return !first_difference(o); }

private:
    int order_ = 1;
    std::vector<int> in_, out_;
    std::vector<SparseVec> cols_;
};

std::size_t tensor_index(const std::vector<int>& dims, const std::vector<int>& tuple);
std::vector<int> tensor_tuple(const std::vector<int>& dims, std::size_t index);

struct HopfData {
    std::string name;
    int dim = 0;
    int order = 1;
    Tensor mu, delta, eta, eps, antipode;
};

struct HopfCheck {
    bool pass = false;
    std::string failing_axiom;
    bool involutory = false;
    bool cocommutative = false;
};

HopfCheck validate_hopf(const HopfData& h);
HopfData group_algebra(const FiniteGroup& g, int order = 1);

// Coalgebra with a ternary operation.
struct TsdObject {
    std::string name;
    int dim = 0;
    int order = 1;
    Tensor delta, eps;
    std::optional<Tensor> eta;
    Tensor T;
    std::optional<Tensor> T_inv;
};

// x (x) y (x) z -> x S(y) z, with T_inv = T o (1 (x) tau). Throws unless involutory.
TsdObject quantum_heap(const HopfData& h);
// x (x) y -> S(y1) x y2
Tensor quantum_conjugation(const HopfData& h);
// T = q o (q (x) 1)
TsdObject double_conjugation(const HopfData& h);
// Grouplike linearization of a set-theoretic structure.
TsdObject linearize(const TernaryStructure& s, int order = 1);

bool is_cocommutative(const TsdObject& d);
// Binary self-distributivity q(q(x,y),z) = q(q(x,z1),q(y,z2)) for q on H.
CheckResult check_binary_sd_object(const HopfData& h, const Tensor& q);
// Both diagram paths on basis 5-tuples, Delta o T = (T (x) T) o shuffle o Delta^3
// and eps o T = eps^3. Counterexample (x,y,z,u,v), or the basis triple.
CheckResult check_tsd_object(const TsdObject& d);
// T_inv(T(x,y1,z1),y2,z2) = eps(y)eps(z)x and T(T_inv(x,y1,z1),y2,z2) = eps(y)eps(z)x.
CheckResult check_rack_object(const TsdObject& d);

struct TrilinearForm {
    int dim = 0;
    int order = 1;
    std::vector<Scalar> values;  // d^3, lexicographic

    TrilinearForm() = default;
    TrilinearForm(int d, int ord);
    const Scalar& at(int x, int y, int z) const { return values[(static_cast<std::size_t>(x) * dim + y) * dim + z]; }
    Scalar& at(int x, int y, int z) { return values[(static_cast<std::size_t>(x) * dim + y) * dim + z]; }
};

struct BilinearForm {
    int dim = 0;
    int order = 1;
    std::vector<Scalar> values;  // d^2

    BilinearForm() = default;
    BilinearForm(int d, int ord);
    const Scalar& at(int x, int y) const { return values[static_cast<std::size_t>(x) * dim + y]; }
    Scalar& at(int x, int y) { return values[static_cast<std::size_t>(x) * dim + y]; }
};

TrilinearForm counit_form(const TsdObject& d);  // eps (x) eps (x) eps
// x (x) y (x) z -> chi(psi(x,y,z)) on the grouplike basis.
TrilinearForm lift_cocycle(const Cochain2& psi, const Character& chi);

std::optional<TrilinearForm> convolution_inverse(const TsdObject& d, const TrilinearForm& a);
std::optional<BilinearForm> convolution_inverse(const HopfData& h, const BilinearForm& s);

struct CategoricalCocycleReport {
    CheckResult cocycle;   // counterexample (x,y,z,u,v)
    bool invertible = false;
    bool normalized = false;  // reported; not part of the verdict
    std::optional<TrilinearForm> inverse;

    bool pass() const { return cocycle.pass && invertible; }
};
CategoricalCocycleReport check_categorical_cocycle(const TsdObject& d, const TrilinearForm& a);

// sigma(x1,y1) sigma(q(x2,y2),z) = sigma(x1,z1) sigma(q(x2,z2),q(y,z3))
CheckResult check_binary_cocycle(const HopfData& h, const Tensor& q, const BilinearForm& s);
// psi(x,y,z) = sigma(x1,y1) sigma(q(x2,y2),z)
TrilinearForm compose_binary_cocycle(const HopfData& h, const Tensor& q, const BilinearForm& s);
// sigma(x1,y1) sigma(x2 y2, z) = sigma(x, y1 z1) sigma(y2, z2), sigma(1,x) = sigma(x,1) = eps(x).
CheckResult check_hopf_cocycle(const HopfData& h, const BilinearForm& s);
// alpha(x,y) = sigma(x1,y1) sigma^-1(y2, S(y3) x2 y4). Throws std::invalid_argument
// when sigma is not a normalized invertible Hopf 2-cocycle or h is not
// cocommutative and involutory.
struct SdCocycleResult {
    BilinearForm alpha;
    CheckResult verified;  // binary cocycle condition for quantum conjugation
};
SdCocycleResult hopf_sigma_to_sd(const HopfData& h, const BilinearForm& s);
// sigma(e_x, e_y) = zeta_m^{xy} on the group algebra of Z_m.
BilinearForm bicharacter(int m);
// sigma(e_x, e_y) = chi(phi(x, y)) for a binary set-theoretic cocycle.
BilinearForm lift_binary(int order, int m, const std::vector<std::int64_t>& exponents);

// Throws std::invalid_argument for a non-cocommutative object.
Tensor build_c22_hopf(const TsdObject& d, const TrilinearForm& a);
Tensor build_theta2_hopf(const TsdObject& d, const TrilinearForm& a);
// Needs T_inv; built from the convolution inverse.
Tensor build_c22_inverse_hopf(const TsdObject& d, const TrilinearForm& a);

struct BraidCheck {
    CheckResult ybe;
    CheckResult inverse;  // skipped (pass, detail set) without T_inv
    CheckResult twist;
    bool pass() const { return ybe.pass && inverse.pass && twist.pass; }
};
// Throws std::length_error when d^6 exceeds max_cells().
BraidCheck check_braid_eq_dense(const TsdObject& d, const TrilinearForm& a);

// First column where the dense operator and the monomial one disagree.
std::optional<std::size_t> compare_with_monomial(const Tensor& dense, const MonomialOperator& op);

struct Integrals {
    SparseVec lambda;            // mu o (lambda (x) 1) = eps lambda
    std::vector<Scalar> gamma;   // (gamma (x) 1) o Delta = eta gamma
    Scalar pairing;              // gamma(lambda), normalized to 1
    Scalar classical_scale;      // eps(lambda) * gamma(1)
};
// gamma(1) = 1 and gamma(lambda) = 1; nullopt without a one-dimensional solution.
std::optional<Integrals> find_integrals(const HopfData& h);

struct FrobeniusReport {
    bool integrals = false;
    bool normalization = false;  // gamma(lambda) = gamma(S lambda) = 1
    bool frobenius_axiom = false;
    bool snake = false;
    bool pairing_commutes = false;  // pairing and copairing commute with c
    bool theta_commutes = false;
    std::string failure;

    bool pass() const {
        return integrals && normalization && frobenius_axiom && snake && pairing_commutes && theta_commutes;
    }
};
FrobeniusReport frobenius_suite(const HopfData& h, const std::optional<Integrals>& given = std::nullopt);

struct LieAlgebra {
    std::string name;
    int n = 0;
    std::vector<Rational> bracket;  // [e_i, e_j] = sum_k c[(i*n + j)*n + k] e_k
};
LieAlgebra abelian_lie(int n);
LieAlgebra sl2_lie();
CheckResult check_lie(const LieAlgebra& l);
// k (+) L with Delta(a,x) = (a,x)(x)(1,0) + (1,0)(x)(0,x) and
// T((a,x),(b,y),(c,z)) = (abc, bcx + c[x,y] + b[x,z] + [[x,y],z]).
TsdObject lie_coalgebra(const LieAlgebra& l);

struct ModuleData {
    std::string name;
    int dim = 0;
    Tensor delta, eps;
    Tensor action;  // X (x) H -> X
    Tensor p;       // X (x) X -> H
};

struct ModuleSystemReport {
    bool coalgebra_maps = false;
    bool equivariant = false;
    bool compatible = false;
    std::string failure;
    std::vector<int> sizes;
    std::vector<Tensor> T;  // [i*q + j]: X_i (x) X_j (x) X_j -> X_i
};
ModuleSystemReport module_compatible_system(const HopfData& h, const std::vector<ModuleData>& modules);
// H = k[G_n] acting on k[G_{n m_i}] with p_i(y^a (x) y^b) = x^{b-a}.
std::vector<ModuleData> augmented_cyclic_modules(int n, const std::vector<int>& ms);

}  // namespace tsdq
