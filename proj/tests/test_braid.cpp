#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gen.hpp"
#include "tsdq/braid.hpp"
#include "tsdq/catalog.hpp"

using namespace tsdq;

namespace {

// Strand tracking by swapping labels at each crossing.
std::vector<int> permutation_oracle(const BraidSequence& b) {
    std::vector<int> at(b.strands);  // at[position] = strand
    std::iota(at.begin(), at.end(), 0);
    for (const auto& it : b.items)
        if (it.kind == BraidItem::Kind::Cross) std::swap(at[it.index - 1], at[it.index]);
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[at[p]] = p;
    return perm;
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size());
    int c = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++c;
        for (std::size_t t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return c;
}

}  // namespace

TEST_CASE("parsing into normal form") {
    const auto a = parse_word("n=2; t1^3 s1 s1");
    CHECK(a.strands == 2);
    CHECK(a.twists == std::vector<std::int64_t>{3, 0});
    CHECK(a.word == std::vector<Letter>{{1, 1}, {1, 1}});

    // The twist on position 1 after s1 belongs to the strand that started at 2.
    const auto b = parse_word("n=3; s1 t1^2 s2^-1");
    CHECK(b.twists == std::vector<std::int64_t>{0, 2, 0});
    CHECK(b.word == std::vector<Letter>{{1, 1}, {2, -1}});

    const auto c = parse_word("n=1; t1^-4");
    CHECK(c.strands == 1);
    CHECK(c.twists == std::vector<std::int64_t>{-4});
    CHECK(c.word.empty());

    CHECK(word_to_string(parse_word("n=1;")) == "n=1;");
    CHECK(parse_word("n=2; s1^2 s1^-1") == parse_word("n=2; s1 s1 s1^-1"));
}

TEST_CASE("syntax errors carry a position") {
    for (const char* bad : {"n=2 s1", "n=0;", "n=2; s2", "n=2; x1", "n=2; t3", "s1", "n=2; s1^"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_sequence(bad), ParseError);
    }
    try {
        parse_sequence("n=2; s1 q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = gen::random_sequence(rng);
        CHECK(parse_sequence(sequence_to_string(s)) == s);
        const auto w = normalize(s);
        CHECK(parse_word(word_to_string(w)) == w);
        CHECK(normalize(to_sequence(w)) == w);
    }
    for (const auto& w : catalog_words()) CHECK(word_to_string(parse_word(w)) == word_to_string(parse_word(word_to_string(parse_word(w)))));
}

TEST_CASE("closure components") {
    CHECK(closure_components(parse_sequence("n=2; s1 s1")).components.size() == 2);
    CHECK(closure_components(parse_sequence("n=2; s1")).components.size() == 1);
    CHECK(closure_components(parse_sequence("n=1; t1^5")).components.size() == 1);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = gen::random_sequence(rng);
        const auto perm = braid_permutation(s);
        CHECK(perm == permutation_oracle(s));
        CHECK(static_cast<int>(closure_components(s).components.size()) == cycle_count(perm));
    }
}

TEST_CASE("framing counts twists and self-crossings") {
    CHECK(closure_components(parse_sequence("n=1; t1^3")).framing == std::vector<std::int64_t>{3});
    CHECK(closure_components(parse_sequence("n=2; s1 s1 s1")).framing == std::vector<std::int64_t>{3});
    // Crossings between different components do not count.
    CHECK(closure_components(parse_sequence("n=2; s1 s1 t2^-1")).framing == std::vector<std::int64_t>{0, -1});
    CHECK(closure_components(parse_sequence("n=2; s1^-1 t1")).framing == std::vector<std::int64_t>{0});
}

TEST_CASE("moves") {
    BraidSequence empty;
    empty.strands = 2;
    Move ins;
    ins.kind = MoveKind::InsertRII;
    ins.generator = 1;
    const auto r2 = apply_move(empty, ins);
    CHECK(r2.items == std::vector<BraidItem>{BraidItem::cross(1, 1), BraidItem::cross(1, -1)});

    Move r3;
    r3.kind = MoveKind::RIII;
    const auto b = parse_sequence("n=3; s1 s2 s1");
    CHECK(apply_move(b, r3) == parse_sequence("n=3; s2 s1 s2"));

    Move conj;
    conj.kind = MoveKind::Conjugate;
    conj.conjugator = {BraidItem::cross(1, 1)};
    CHECK(apply_move(parse_sequence("n=2; t1 s1"), conj) == parse_sequence("n=2; s1 t1 s1 s1^-1"));

    Move far;
    far.kind = MoveKind::FarCommute;
    CHECK_THROWS_AS(apply_move(b, far), MoveError);
}

TEST_CASE("moves preserve the closure's components and framing") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = gen::random_sequence(rng, 3, 6, 2);
        const auto base = closure_components(s);
        auto sorted_framing = [](const ClosureInfo& c) {
            std::vector<std::pair<std::size_t, std::int64_t>> v;
            for (std::size_t k = 0; k < c.components.size(); ++k) v.push_back({c.components[k].size(), c.framing[k]});
            std::sort(v.begin(), v.end());
            return v;
        };
        for (const auto& mv : applicable_moves(s)) {
            const auto t = apply_move(s, mv);
            const auto c = closure_components(t);
            CHECK(c.components.size() == base.components.size());
            CHECK(sorted_framing(c) == sorted_framing(base));
        }
    }
}
