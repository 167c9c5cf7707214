#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tsdq/coeffs.hpp"
#include "tsdq/parallel.hpp"
#include "tsdq/smith.hpp"

using namespace tsdq;

TEST_CASE("cyclotomic polynomials agree with the division oracle") {
    for (int n = 1; n <= 40; ++n) {
        const auto& lib = cyclotomic_poly(n);
        const auto ref = oracle::cyclotomic(n);
        REQUIRE(lib.size() == ref.size());
        for (std::size_t k = 0; k < ref.size(); ++k) CHECK(lib[k] == ref[k]);
        CHECK(euler_phi(n) == oracle::totient(n));
    }
    CHECK(cyclotomic_poly(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("normalization of small sums") {
    CHECK(Cyclotomic::from_poly(3, {1, 1, 1}).is_zero());
    CHECK(Cyclotomic::zeta_power(4, 4) == Cyclotomic::constant(4, 1));

    // z^5 + z mod (z^2 - z + 1)
    const auto rem = oracle::poly_rem({0, 1, 0, 0, 0, 1}, oracle::cyclotomic(6));
    const auto c = Cyclotomic::from_poly(6, {0, 1, 0, 0, 0, 1});
    REQUIRE(c.coords().size() == rem.size());
    for (std::size_t k = 0; k < rem.size(); ++k) CHECK(c.coords()[k] == rem[k]);
    CHECK(c == Cyclotomic::constant(6, 1));
}

TEST_CASE("products") {
    CHECK(Cyclotomic::zeta_power(3, 1) * Cyclotomic::zeta_power(3, 2) == Cyclotomic::constant(3, 1));
    const auto z = Cyclotomic::zeta_power(4, 1), one = Cyclotomic::constant(4, 1);
    CHECK((z + one) * (z - one) == Cyclotomic::constant(4, -2));
    const auto x = Cyclotomic::from_poly(7, {3, -1, 0, 2});
    CHECK(Cyclotomic::constant(7, 1) * x == x);
}

TEST_CASE("ring operations match the complex embedding") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::int64_t> p(2 * n + 1), q(n + 3);
            for (auto& v : p) v = coef(rng);
            for (auto& v : q) v = coef(rng);
            const auto a = Cyclotomic::from_poly(n, p), b = Cyclotomic::from_poly(n, q);
            CHECK(oracle::near(oracle::eval(a.coords(), n), oracle::eval(p, n)));
            CHECK(oracle::near(oracle::eval((a * b).coords(), n), oracle::eval(p, n) * oracle::eval(q, n)));
            CHECK(oracle::near(oracle::eval((a - b).coords(), n), oracle::eval(p, n) - oracle::eval(q, n)));
            CHECK(oracle::near(oracle::eval(a.lift(3 * n).coords(), 3 * n), oracle::eval(p, n)));
        }
    }
}

TEST_CASE("field inverse") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int n : {3, 5, 7, 8, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::int64_t> p(n);
            for (auto& v : p) v = coef(rng);
            const auto a = Cyclotomic::from_poly(n, p);
            if (a.is_zero()) continue;
            const auto q = to_rational(a);
            CHECK(q * inverse(q) == CyclotomicQ::constant(n, Rational(1)));
        }
    }
    CHECK_THROWS(inverse(CyclotomicQ(5)));
}

TEST_CASE("characters") {
    const auto z4 = AbelianGroup::integers();
    const auto chi = Character::standard(z4, 4);
    CHECK(chi.apply({6}) == Cyclotomic::constant(4, -1));
    CHECK(chi.apply({0}) == Cyclotomic::constant(4, 1));
    for (int m = 2; m <= 8; ++m) {
        const auto c = Character::standard(AbelianGroup::cyclic(m), m);
        for (int k = 0; k < m; ++k) CHECK(c.apply({k}) == Cyclotomic::zeta_power(m, k));
    }
    // A character on Z2+Z3 valued in the sixth roots of unity.
    const Character prod(AbelianGroup({2, 3}), 6, {3, 2});
    CHECK(prod.apply({1, 1}) == Cyclotomic::zeta_power(6, 5));
    CHECK(prod.apply({0, 0}) == Cyclotomic::constant(6, 1));
}

TEST_CASE("abelian groups") {
    const AbelianGroup a({2, 0, 3});
    CHECK(a.to_string() == "Z2+Z+Z3");
    CHECK(AbelianGroup(std::vector<std::int64_t>{}).to_string() == "0");
    CHECK(a.reduce({5, -7, -1}) == AbelianGroup::Element{1, -7, 2});
    CHECK(a.add({1, 2, 2}, {1, 3, 2}) == AbelianGroup::Element{0, 5, 1});
    CHECK_FALSE(a.is_finite());
    const AbelianGroup f({2, 3});
    CHECK(f.order() == 6);
    for (int k = 0; k < 6; ++k) CHECK(f.contains(f.element_at(k)));
    CHECK(f.element_at(5) == AbelianGroup::Element{1, 2});
}

TEST_CASE("group ring terms cancel") {
    GroupRingElement g(AbelianGroup::integers());
    g.add_term({1}, 3);
    g.add_term({1}, -3);
    CHECK(g.is_zero());
    g.add_term({2}, 2);
    g.add_term({0}, 5);
    CHECK(g.augmentation() == 7);
}

TEST_CASE("overflow is detected") {
    CHECK_THROWS_AS(detail::mul_checked(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
}

TEST_CASE("smith normal form of random matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = coef(rng);
        const auto s = smith_normal_form(a, kTrackBoth);
        const auto d = s.R * a * s.C;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                CHECK(d(i, j) == (i == j && i < s.rank() ? s.diagonal[i] : 0));
        for (std::size_t k = 1; k < s.rank(); ++k) CHECK(s.diagonal[k] % s.diagonal[k - 1] == 0);
        CHECK(s.R * s.Rinv == IntMatrix::identity(r));
        CHECK(s.C * s.Cinv == IntMatrix::identity(c));
    }
}

TEST_CASE("linear solve") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    CHECK_FALSE(solve_linear(a, {1, 0}, 0).has_value());
    const auto x = solve_linear(a, {1, 0}, 5);
    REQUIRE(x.has_value());
    CHECK(oracle::mod(2 * (*x)[0], 5) == 1);
    const auto y = solve_linear(a, {4, 9}, 0);
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("parallel_first reports the smallest hit") {
    for (int w : {1, 3}) {
        set_worker_count(w);
        auto hit = parallel_first(1000, [](std::size_t i) -> std::optional<std::vector<int>> {
            if (i % 97 == 13) return std::vector<int>{static_cast<int>(i)};
            return std::nullopt;
        });
        REQUIRE(hit.has_value());
        CHECK(hit->first == 13);
    }
    set_worker_count(0);
}
