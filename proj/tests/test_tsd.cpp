#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tsdq/catalog.hpp"
#include "tsdq/tsd.hpp"

using namespace tsdq;

namespace {

TernaryStructure table_of(int m, const oracle::Ternary& f) {
    return TernaryStructure::from_function("t", m, f);
}

// Replays a reported counterexample of the TSD identity.
bool violates(const TernaryStructure& s, const std::vector<int>& c) {
    if (c.size() != 5) return false;
    const int x = c[0], y = c[1], z = c[2], u = c[3], v = c[4];
    return s.T(s.T(x, y, z), u, v) != s.T(s.T(x, u, v), s.T(y, u, v), s.T(z, u, v));
}

}  // namespace

TEST_CASE("ternary self-distributivity") {
    auto heap3 = [](int x, int y, int z) { return static_cast<int>(oracle::mod(x - y + z, 3)); };
    auto sum3 = [](int x, int y, int z) { return (x + y + z) % 3; };
    CHECK(check_tsd(table_of(3, heap3)).pass);
    CHECK(oracle::is_tsd(3, heap3));

    const auto bad = table_of(3, sum3);
    const auto r = check_tsd(bad);
    CHECK_FALSE(oracle::is_tsd(3, sum3));
    REQUIRE_FALSE(r.pass);
    CHECK(violates(bad, r.counterexample));
    CHECK(r.checked < r.total);

    CHECK(check_tsd(table_of(1, [](int, int, int) { return 0; })).pass);
}

TEST_CASE("random tables agree with the oracle") {
    std::mt19937 rng(5);
    int failures = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + trial % 2;
        std::vector<int> t(m * m * m);
        for (auto& v : t) v = static_cast<int>(rng() % m);
        auto f = [&](int x, int y, int z) { return t[(x * m + y) * m + z]; };
        const auto s = table_of(m, f);
        const auto r = check_tsd(s);
        CHECK(r.pass == oracle::is_tsd(m, f));
        if (!r.pass) {
            ++failures;
            CHECK(violates(s, r.counterexample));
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("racks and left inverses") {
    auto h = heap_of_group(cyclic_group(4));
    REQUIRE(check_rack(h).pass);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) CHECK(h.L(x, y, z) == oracle::mod(x + y - z, 4));

    auto constant = table_of(2, [](int, int, int) { return 0; });
    CHECK_FALSE(check_rack(constant).pass);
    auto single = table_of(1, [](int, int, int) { return 0; });
    CHECK(check_rack(single).pass);
}

TEST_CASE("heaps of groups") {
    const auto z2 = heap_of_group(cyclic_group(2));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) CHECK(z2.T(x, y, z) == (x + y + z) % 2);

    for (const auto& g : {dihedral3(), symmetric3(), cyclic_group(5), sl2_z3()}) {
        const auto s = heap_of_group(g);
        CHECK(s.m == g.order);
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y)
                for (int z = 0; z < g.order; ++z) CHECK(s.T(x, y, z) == g(g(x, g.inv[y]), z));
        if (g.order <= 6) CHECK(check_tsd(s).pass);
    }
    CHECK(heap_of_group(trivial_group()).m == 1);
}

TEST_CASE("group presentations") {
    const auto d3 = dihedral3();
    const int r = d3.index_of("r"), s = d3.index_of("s");
    // Words read as right actions: "sr" is r*s.
    CHECK(d3(r, s) == d3.index_of("sr"));
    CHECK(d3(d3(r, r), s) == d3.index_of("sr2"));
    CHECK(d3(s, s) == d3.identity);
    CHECK_THROWS_AS(d3.index_of("t"), std::invalid_argument);

    const auto s3 = symmetric3();
    CHECK(s3.names.front() == "012");
    const int a = s3.index_of("102"), b = s3.index_of("021");
    // (a*b)(i) = a(b(i)): 0->0->1, 1->2->2, 2->1->0
    CHECK(s3.names[s3(a, b)] == "120");

    const auto sl = sl2_z3();
    CHECK(sl.order == 24);
    for (int g = 0; g < 24; ++g) {
        const auto e = sl2_z3_entries(g);
        CHECK(oracle::mod(e[0] * e[3] - e[1] * e[2], 3) == 1);
    }
}

TEST_CASE("composed binary quandles") {
    const auto q = dihedral_quandle(3);
    CHECK(check_binary_sd(q).pass);
    CHECK(is_idempotent(q));
    CHECK(right_translations_bijective(q));
    const auto t = compose_binary(q);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) CHECK(t.T(x, y, z) == oracle::mod(2 * z - 2 * y + x, 3));

    const auto triv = compose_binary(trivial_quandle(4));
    for (int x = 0; x < 4; ++x) CHECK(triv.T(x, 2, 3) == x);

    const auto conj = compose_binary(conjugation_quandle(symmetric3()));
    CHECK(check_tsd(conj).pass);
    CHECK(oracle::is_tsd(6, [&](int x, int y, int z) { return conj.T(x, y, z); }));
}

TEST_CASE("G-families") {
    const auto alex = alexander_gfamily_sl2z3();
    CHECK(alex.group.order == 24);
    CHECK(alex.m == 9);
    CHECK(gfamily_check(alex).pass);
    // x *^g y = x g + y (1 - g) on row vectors
    for (int g = 0; g < 24; ++g) {
        const auto a = sl2_z3_entries(g);
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) {
                const int x0 = x / 3, x1 = x % 3, y0 = y / 3, y1 = y % 3;
                const long r0 = oracle::mod(x0 * a[0] + x1 * a[2] + y0 - (y0 * a[0] + y1 * a[2]), 3);
                const long r1 = oracle::mod(x0 * a[1] + x1 * a[3] + y1 - (y0 * a[1] + y1 * a[3]), 3);
                CHECK(alex.op(g, x, y) == 3 * r0 + r1);
            }
    }

    auto scrambled = alex;
    std::mt19937 rng(9);
    for (auto& t : scrambled.ops)
        for (auto& v : t) v = static_cast<std::uint8_t>(rng() % 9);
    CHECK_FALSE(gfamily_check(scrambled).pass);

    CHECK(gfamily_check(trivial_gfamily(3, trivial_group())).pass);
    CHECK(gfamily_check(dihedral_z2_family(5)).pass);
}

TEST_CASE("compatible systems from G-families") {
    const auto triv = gfamily_to_compatible(trivial_gfamily(3, cyclic_group(2)));
    CHECK(triv.literal_check.pass);
    for (int x = 0; x < 3; ++x) CHECK(triv.system().T(0, 1, x, 1, 2) == x);

    const auto dih = gfamily_to_compatible(dihedral_z2_family(3), Budget{}, true);
    CHECK(dih.system().q() == 2);
    CHECK(dih.literal_check.pass);
    CHECK(dih.literal_check.total == 8ull * 243);
    CHECK(dih.literal_check.checked == dih.literal_check.total);

    Budget small;
    small.max_identities = 200000;
    small.seed = 4;
    const auto alex = gfamily_to_compatible(alexander_gfamily_sl2z3(), small);
    CHECK(alex.literal_check.pass);
    CHECK(alex.literal_check.sampled);
    CHECK(alex.literal_check.checked == 200000);
    CHECK(alex.system().q() == 24);
}

TEST_CASE("mutually distributive pairs") {
    const auto heap = catalog_structure("heap:Z5"), dih = catalog_structure("dihedral:Z5");
    const auto sys = mutually_distributive_system(heap, dih);
    CHECK(check_compatible_system(sys).pass);

    auto broken = sys;
    std::mt19937 rng(1);
    for (auto& v : broken.tables[1]) v = static_cast<std::uint8_t>(rng() % 5);
    const auto r = check_compatible_system(broken);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample.size() == 8);
    const auto& c = r.counterexample;
    CHECK(broken.T(c[0], c[2], broken.T(c[0], c[1], c[3], c[4], c[5]), c[6], c[7]) !=
          broken.T(c[0], c[1], broken.T(c[0], c[2], c[3], c[6], c[7]), broken.T(c[1], c[2], c[4], c[6], c[7]),
                   broken.T(c[1], c[2], c[5], c[6], c[7])));

    const auto bad = table_of(3, [](int x, int y, int z) { return (x + y + z) % 3; });
    CHECK(check_compatible_system(single_system(bad)).pass == check_tsd(bad).pass);
    CHECK(check_compatible_system(single_system(heap)).pass);
}

TEST_CASE("augmented cyclic systems") {
    const auto a = augmented_cyclic_system(2, 2, 3);
    CHECK(a.sizes == std::vector<int>{4, 6});
    CHECK(check_compatible_system(a).pass);
    CHECK(augmented_equivariance(2, 2, 3).pass);
    CHECK(check_compatible_system(augmented_cyclic_system(2, 2, 3, DiagonalRule::Heap)).pass);

    const auto d = augmented_cyclic_system(1, 1, 2);
    CHECK(d.sizes == std::vector<int>{1, 2});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 1; ++y) CHECK(d.T(1, 0, x, y, y) == x);
    CHECK(check_compatible_system(d).pass);

    CHECK(check_compatible_system(augmented_cyclic_system(3, 2, 5)).pass);
    CHECK_THROWS_AS(augmented_cyclic_system(2, 2, 4), std::invalid_argument);
}

TEST_CASE("diagonal of a system is its own structure") {
    const auto sys = mutually_distributive_system(catalog_structure("heap:Z4"), catalog_structure("dihedral:Z4"));
    CHECK(sys.diagonal(0).table == catalog_structure("heap:Z4").table);
    CHECK(sys.diagonal(1).table == catalog_structure("dihedral:Z4").table);
}
