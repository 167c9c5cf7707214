#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsdq {

// A twist t_index^power on the strand at a position, or a single crossing
// sigma_index^power with power = +-1. Positions and generators are 1-based.
struct BraidItem {
    enum class Kind { Twist, Cross };
    Kind kind = Kind::Cross;
    int index = 1;
    int power = 1;

    static BraidItem twist(int strand, int power) { return {Kind::Twist, strand, power}; }
    static BraidItem cross(int gen, int sign) { return {Kind::Cross, gen, sign}; }
    bool operator==(const BraidItem&) const = default;
};

// Raw word: twists may appear anywhere. Read top to bottom.
struct BraidSequence {
    int strands = 1;
    std::vector<BraidItem> items;
    bool operator==(const BraidSequence&) const = default;
};

struct Letter {
    int gen = 1;
    int sign = 1;
    bool operator==(const Letter&) const = default;
};

// Normal form t_1^{r_1} ... t_n^{r_n} * tau.
struct FramedBraidWord {
    int strands = 1;
    std::vector<std::int64_t> twists;
    std::vector<Letter> word;
    bool operator==(const FramedBraidWord&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar: "n=" INT ";" item*, item = ("t"|"s") INT ("^" SIGNED_INT)?
BraidSequence parse_sequence(const std::string& text);
FramedBraidWord parse_word(const std::string& text);
std::string word_to_string(const FramedBraidWord& b);
std::string sequence_to_string(const BraidSequence& b);

// Twists slide to the top through t_i s_j = s_j t_{pi_j(i)}.
FramedBraidWord normalize(const BraidSequence& b);
BraidSequence to_sequence(const FramedBraidWord& b);

// perm[p] = bottom position (0-based) reached by the strand entering at top position p.
std::vector<int> braid_permutation(const BraidSequence& b);

struct ClosureInfo {
    std::vector<int> permutation;
    std::vector<std::vector<int>> components;  // 1-based strands, ordered by least strand
    std::vector<int> component_of;             // per 0-based top position
    std::vector<std::int64_t> framing;         // twists plus self-crossing writhe
};

ClosureInfo closure_components(const BraidSequence& b);
ClosureInfo closure_components(const FramedBraidWord& b);

enum class MoveKind {
    InsertRII,         // insert s_g^e s_g^-e before `position`
    RemoveRII,         // remove s_g^e s_g^-e at `position`
    RIII,              // s_i s_{i+1} s_i <-> s_{i+1} s_i s_{i+1}, same sign
    FarCommute,        // s_i s_j <-> s_j s_i for |i - j| >= 2
    TwistSlide,        // move a twist across the adjacent crossing
    InsertTwistPair,   // insert t_strand^1 t_strand^-1 before `position`
    RemoveTwistPair,   // remove a twist pair with opposite powers
    Conjugate,         // w b w^-1
    Rotate,            // move the first item to the end (conjugation)
};

struct Move {
    MoveKind kind = MoveKind::InsertRII;
    std::size_t position = 0;
    int generator = 1;
    int sign = 1;
    int strand = 1;
    std::vector<BraidItem> conjugator;
};

class MoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BraidSequence apply_move(const BraidSequence& b, const Move& move);
FramedBraidWord apply_move(const FramedBraidWord& b, const Move& move);

// Every position-based move that applies to b, plus one insertion of each kind
// per position and generator/strand.
std::vector<Move> applicable_moves(const BraidSequence& b);

}  // namespace tsdq
