#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsdq/braid.hpp"
#include "tsdq/coeffs.hpp"
#include "tsdq/cohomology.hpp"
#include "tsdq/parallel.hpp"
#include "tsdq/statesum.hpp"
#include "tsdq/tsd.hpp"

namespace tsdq {

// Weighted permutation of basis tuples. Doubled strand k occupies slots 2k and
// 2k+1 and carries an element of X_{carrier[k]}; tuples are indexed
// lexicographically with slot 0 most significant. Weights are powers of zeta_N.
class MonomialOperator {
public:
    MonomialOperator() = default;
    static MonomialOperator identity(std::vector<int> sizes, std::vector<int> carriers, int root_order);

    const std::vector<int>& sizes() const { return sizes_; }
    const std::vector<int>& domain() const { return domain_; }
    const std::vector<int>& codomain() const { return codomain_; }
    int strands() const { return static_cast<int>(domain_.size()); }
    int root_order() const { return root_order_; }
    std::size_t dimension() const { return targets_.size(); }

    std::uint32_t target(std::size_t i) const { return targets_[i]; }
    std::int64_t exponent(std::size_t i) const { return exps_[i]; }
    Cyclotomic weight(std::size_t i) const { return Cyclotomic::zeta_power(root_order_, exps_[i]); }

    // Apply *this first, then next.
    MonomialOperator then(const MonomialOperator& next) const;
    MonomialOperator inverse() const;
    MonomialOperator rescaled(int root_order) const;

    std::optional<std::size_t> first_difference(const MonomialOperator& o) const;
    bool operator==(const MonomialOperator& o) const { return !first_difference(o); }

    std::vector<int> decode(std::size_t index, bool codomain = false) const;
    std::size_t encode(const std::vector<int>& tuple, bool codomain = false) const;

    // Builders fill these directly.
    std::vector<std::uint32_t>& mutable_targets() { return targets_; }
    std::vector<std::int32_t>& mutable_exponents() { return exps_; }
    void set_codomain(std::vector<int> c) { codomain_ = std::move(c); }

private:
    std::vector<int> sizes_;
    std::vector<int> domain_, codomain_;
    int root_order_ = 1;
    std::vector<std::uint32_t> targets_;
    std::vector<std::int32_t> exps_;
};

// Matrix trace: zero when domain and codomain carriers differ.
Cyclotomic trace(const MonomialOperator& op);
// Fixed-point weights before reduction modulo the cyclotomic polynomial.
ZetaSum trace_sum(const MonomialOperator& op);

struct WeightContext {
    TernaryStructure structure;
    Cochain2 cocycle;
    Character character;

    // Checks that the character is defined on the cocycle's coefficients.
    static WeightContext make(TernaryStructure s, Cochain2 psi, Character chi);
};

struct SystemWeightContext {
    SystemCocycle cocycle;
    Character character;
};

SystemWeightContext as_system(const WeightContext& ctx);

// sign -1 gives the inverse braiding built from the left inverse.
MonomialOperator braiding_operator(const WeightContext& ctx, int n, int pos, int sign = 1);
MonomialOperator twist_operator(const WeightContext& ctx, int n, int strand, int power);
MonomialOperator phi_of_word(const WeightContext& ctx, const FramedBraidWord& b);
MonomialOperator phi_of_sequence(const WeightContext& ctx, const BraidSequence& b);
Cyclotomic quantum_invariant(const WeightContext& ctx, const FramedBraidWord& b);
Cyclotomic quantum_invariant(const WeightContext& ctx, const BraidSequence& b);

MonomialOperator braiding_operator(const SystemWeightContext& ctx, const std::vector<int>& carriers, int pos,
                                   int sign = 1);
MonomialOperator twist_operator(const SystemWeightContext& ctx, const std::vector<int>& carriers, int strand,
                                int power);
// carriers[k] is the carrier of the strand entering at top position k.
MonomialOperator phi_of_sequence(const SystemWeightContext& ctx, const BraidSequence& b,
                                 const std::vector<int>& carriers);

// Weight chi(f(x) + f(y)) on every doubled strand (x, y); inverse negates.
MonomialOperator diagonal_operator(const WeightContext& ctx, int n, const Cochain1& f, bool inverse = false);

struct Comparison {
    bool equal = false;
    Cyclotomic state_sum;  // character image of the vector invariant
    Cyclotomic quantum;
    InvariantValue invariant;
};

// For links the component weights are multiplied into one pair before chi.
Comparison compare_invariants(const WeightContext& ctx, const BraidSequence& b);
Comparison compare_invariants(const WeightContext& ctx, const FramedBraidWord& b);

// Exhaustive over basis tuples. Counterexample: (identity id, tuple index).
// Ids: 0 braid equation, 1 t2 s1 = s1 t1, 2 t1 s1 = s1 t2,
// 3 (t1 t2) s1 s1 = s1 s1 (t1 t2), 4 s1 s1^-1 = id, 5 s1^-1 s1 = id, 6 t1 t1^-1 = id.
CheckResult check_ybe(const WeightContext& ctx);
CheckResult check_twist_coherence(const WeightContext& ctx);
// Same identities over all carrier triples/pairs; counterexample starts with
// the identity id, then the carriers, then the tuple index.
CheckResult check_system_coherence(const SystemWeightContext& ctx);

struct FixedPointReport {
    bool match = false;
    std::uint64_t fixed_points = 0;
    std::uint64_t colorings = 0;
    std::string detail;
};
// Fixed tuples of phi(b) against colorings, with per-coloring weights.
FixedPointReport fixed_points_vs_colorings(const WeightContext& ctx, const BraidSequence& b);

struct TorusReport {
    int m = 0, n = 0, i = 0;
    Cyclotomic trace;         // brute force trace of c^{2n}
    Cyclotomic state_sum;     // character image of the vector invariant
    Cyclotomic quadratic;     // m^2 z^{4n} + 2 m^2 (m-1) z^{2n} + m^2 (m-1)^2
    Cyclotomic printed;       // n^2 z^{4n} + 2n(n-1) z^{2n} + n^4 + n
    Cyclotomic closed_form;   // m^2 (d - 1 + z^{2n})^2 if (m/d) | i, else m^2 d^2, d = gcd(n, m)
    bool trace_is_quadratic = false;
    bool trace_is_printed = false;
    bool trace_is_closed_form = false;
    bool trace_is_state_sum = false;
};
// Closure of s1^{2n} on two strands over the heap of Z_m with phi_i, zeta = zeta_m.
TorusReport torus_link_report(int m, int n, int i);

// "c_0 + c_1*z + ..." over exponents 0..N-1, unreduced.
std::string zeta_sum_string(const ZetaSum& s);

}  // namespace tsdq
