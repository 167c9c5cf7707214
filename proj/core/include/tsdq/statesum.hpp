#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsdq/braid.hpp"
#include "tsdq/coeffs.hpp"
#include "tsdq/cohomology.hpp"
#include "tsdq/tsd.hpp"

namespace tsdq {

using ColorPair = std::pair<int, int>;

struct StateSumOptions {
    // Debug only: colors the underpass of a negative crossing by T instead of
    // its left inverse. Breaks RII invariance.
    bool forward_negative = false;
};

struct ColoringStep {
    std::size_t item = 0;
    std::vector<ColorPair> before, after;
    ColorPair under{}, over{};  // over == under for a twist step
    int sign = 1;
    bool twist = false;
};

struct Coloring {
    std::vector<ColorPair> top;
    std::vector<ColoringStep> steps;
};

// Colors the doubled strands top to bottom. nullopt when the bottom colors do
// not close up with the top ones.
std::optional<Coloring> propagate_coloring(const BraidSequence& b, const std::vector<ColorPair>& top,
                                           const TernaryStructure& s, const StateSumOptions& opt = {});
std::optional<Coloring> propagate_coloring(const FramedBraidWord& b, const std::vector<ColorPair>& top,
                                           const TernaryStructure& s, const StateSumOptions& opt = {});

// Lexicographic in the top colors.
std::vector<Coloring> enumerate_colorings(const BraidSequence& b, const TernaryStructure& s,
                                          const StateSumOptions& opt = {});
std::uint64_t count_colorings(const BraidSequence& b, const TernaryStructure& s, const StateSumOptions& opt = {});

// Sum over colorings in Z[(A x A)^t]. Keys hold, per component, the first
// weight then the second, each of A's rank.
struct InvariantValue {
    int components = 1;
    GroupRingElement value;
    std::uint64_t colorings = 0;

    bool operator==(const InvariantValue& o) const {
        return components == o.components && value == o.value && colorings == o.colorings;
    }
};

InvariantValue vector_invariant(const BraidSequence& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt = {});
InvariantValue vector_invariant(const FramedBraidWord& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt = {});
// Throws std::invalid_argument unless the closure is a knot.
InvariantValue ribbon_invariant(const BraidSequence& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt = {});
InvariantValue ribbon_invariant(const FramedBraidWord& b, const TernaryStructure& s, const Cochain2& psi,
                                const StateSumOptions& opt = {});

// assignment[k] is the carrier index of top strand k. Assignments that are not
// constant along closure components admit no colorings.
InvariantValue statesum_for_system(const BraidSequence& b, const SystemCocycle& alpha,
                                   const std::vector<int>& assignment, const StateSumOptions& opt = {});
// Sum over every assignment constant on components.
InvariantValue statesum_for_system(const BraidSequence& b, const SystemCocycle& alpha,
                                   const StateSumOptions& opt = {});

// Sum of coeff * chi(product of every weight in the key).
Cyclotomic character_image(const InvariantValue& v, const Character& chi);

}  // namespace tsdq
