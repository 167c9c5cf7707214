#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsdq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
    return r;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
    return r;
}
inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

inline std::int64_t add_coeff(std::int64_t a, std::int64_t b) { return add_checked(a, b); }
inline std::int64_t sub_coeff(std::int64_t a, std::int64_t b) { return sub_checked(a, b); }
inline std::int64_t mul_coeff(std::int64_t a, std::int64_t b) { return mul_checked(a, b); }
inline Rational add_coeff(const Rational& a, const Rational& b) { return a + b; }
inline Rational sub_coeff(const Rational& a, const Rational& b) { return a - b; }
inline Rational mul_coeff(const Rational& a, const Rational& b) { return a * b; }

}  // namespace detail

// Nonnegative remainder.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t k) {
    std::int64_t r = a % k;
    return r < 0 ? r + k : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
int euler_phi(int n);

// Coefficients of Phi_n, lowest degree first. Cached.
const std::vector<std::int64_t>& cyclotomic_poly(int n);

// Product of cyclic factors; factor 0 stands for Z.
class AbelianGroup {
public:
    using Element = std::vector<std::int64_t>;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<std::int64_t> factors);

    static AbelianGroup cyclic(std::int64_t k) { return AbelianGroup({k}); }
    static AbelianGroup integers() { return AbelianGroup({0}); }
    static AbelianGroup power(const AbelianGroup& a, int times);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    bool is_finite() const;
    // 0 when infinite.
    std::int64_t order() const;

    Element zero() const { return Element(factors_.size(), 0); }
    std::int64_t reduce_coord(std::size_t c, std::int64_t v) const {
        return factors_[c] == 0 ? v : mod_floor(v, factors_[c]);
    }
    Element reduce(Element a) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    bool contains(const Element& a) const;

    // Enumeration of a finite group in lexicographic order.
    Element element_at(std::int64_t index) const;

    std::string to_string() const;
    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<std::int64_t> factors_;
};

// Formal integer combinations of elements of a product group.
class GroupRingElement {
public:
    using Key = AbelianGroup::Element;

    GroupRingElement() = default;
    explicit GroupRingElement(AbelianGroup base) : base_(std::move(base)) {}

    const AbelianGroup& base() const { return base_; }
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    void add_term(const Key& k, std::int64_t c);
    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement& operator+=(const GroupRingElement& o);
    bool operator==(const GroupRingElement& o) const {
        return base_ == o.base_ && terms_ == o.terms_;
    }
    std::int64_t augmentation() const;
    bool is_zero() const { return terms_.empty(); }

private:
    AbelianGroup base_;
    std::map<Key, std::int64_t> terms_;
};

template <class R>
class BasicCyclotomic {
public:
    BasicCyclotomic() : BasicCyclotomic(1) {}
    explicit BasicCyclotomic(int order) : order_(order) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
        coords_.assign(euler_phi(order), R(0));
    }

    static BasicCyclotomic from_poly(int order, std::vector<R> poly) {
        BasicCyclotomic c(order);
        const auto& phi = cyclotomic_poly(order);
        const int deg = static_cast<int>(phi.size()) - 1;
        // Fold with x^N = 1 first; Phi_N divides x^N - 1.
        std::vector<R> p(order, R(0));
        for (std::size_t k = 0; k < poly.size(); ++k)
            p[k % order] = detail::add_coeff(p[k % order], poly[k]);
        for (int d = order - 1; d >= deg; --d) {
            if (p[d] == R(0)) continue;
            R lead = p[d];
            for (int j = 0; j < deg; ++j)
                p[d - deg + j] = detail::sub_coeff(p[d - deg + j], detail::mul_coeff(lead, R(phi[j])));
            p[d] = R(0);
        }
        for (int j = 0; j < deg; ++j) c.coords_[j] = p[j];
        return c;
    }
    static BasicCyclotomic constant(int order, R v) {
        BasicCyclotomic c(order);
        c.coords_[0] = v;
        return c;
    }
    static BasicCyclotomic zeta_power(int order, std::int64_t k) {
        std::vector<R> p(order, R(0));
        p[mod_floor(k, order)] = R(1);
        return from_poly(order, std::move(p));
    }

    int order() const { return order_; }
    const std::vector<R>& coords() const { return coords_; }
    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != R(0)) return false;
        return true;
    }

    // Re-express in Q(zeta_M) for a multiple M of the order.
    BasicCyclotomic lift(int target) const {
        if (target % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
        const int s = target / order_;
        std::vector<R> p(static_cast<std::size_t>(coords_.size()) * s + 1, R(0));
        for (std::size_t j = 0; j < coords_.size(); ++j) p[j * s] = coords_[j];
        return from_poly(target, std::move(p));
    }

    BasicCyclotomic operator+(const BasicCyclotomic& o) const {
        check_same(o);
        BasicCyclotomic r(order_);
        for (std::size_t j = 0; j < coords_.size(); ++j) r.coords_[j] = detail::add_coeff(coords_[j], o.coords_[j]);
        return r;
    }
    BasicCyclotomic operator-(const BasicCyclotomic& o) const {
        check_same(o);
        BasicCyclotomic r(order_);
        for (std::size_t j = 0; j < coords_.size(); ++j) r.coords_[j] = detail::sub_coeff(coords_[j], o.coords_[j]);
        return r;
    }
    BasicCyclotomic operator-() const { return BasicCyclotomic(order_) - *this; }
    BasicCyclotomic operator*(const BasicCyclotomic& o) const {
        check_same(o);
        const std::size_t n = coords_.size();
        std::vector<R> p(2 * n, R(0));
        for (std::size_t a = 0; a < n; ++a) {
            if (coords_[a] == R(0)) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (o.coords_[b] == R(0)) continue;
                p[a + b] = detail::add_coeff(p[a + b], detail::mul_coeff(coords_[a], o.coords_[b]));
            }
        }
        return from_poly(order_, std::move(p));
    }
    BasicCyclotomic scaled(const R& s) const {
        BasicCyclotomic r(order_);
        for (std::size_t j = 0; j < coords_.size(); ++j) r.coords_[j] = detail::mul_coeff(coords_[j], s);
        return r;
    }
    BasicCyclotomic& operator+=(const BasicCyclotomic& o) { return *this = *this + o; }
    BasicCyclotomic& operator-=(const BasicCyclotomic& o) { return *this = *this - o; }
    BasicCyclotomic& operator*=(const BasicCyclotomic& o) { return *this = *this * o; }

    bool operator==(const BasicCyclotomic& o) const { return order_ == o.order_ && coords_ == o.coords_; }
    bool operator!=(const BasicCyclotomic& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same(const BasicCyclotomic& o) const {
        if (order_ != o.order_) throw std::invalid_argument("cyclotomic orders differ");
    }

    int order_;
    std::vector<R> coords_;
};

using Cyclotomic = BasicCyclotomic<std::int64_t>;
using CyclotomicQ = BasicCyclotomic<Rational>;

Cyclotomic cyclo_normalize(const std::vector<std::int64_t>& poly, int order);
Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b);
// Brings both operands to the lcm of their orders.
std::pair<Cyclotomic, Cyclotomic> common_order(const Cyclotomic& a, const Cyclotomic& b);

// Field inverse in Q(zeta_N); throws on zero.
CyclotomicQ inverse(const CyclotomicQ& a);
CyclotomicQ to_rational(const Cyclotomic& a);

// Sum of powers of zeta_N kept as exponent counts until the end.
class ZetaSum {
public:
    explicit ZetaSum(int order) : counts_(order, 0) {}
    void add(std::int64_t exponent, std::int64_t count = 1) {
        auto& c = counts_[mod_floor(exponent, static_cast<std::int64_t>(counts_.size()))];
        c = detail::add_checked(c, count);
    }
    void merge(const ZetaSum& o);
    int order() const { return static_cast<int>(counts_.size()); }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    Cyclotomic value() const { return Cyclotomic::from_poly(order(), counts_); }

private:
    std::vector<std::int64_t> counts_;
};

class Character {
public:
    Character() = default;
    Character(AbelianGroup source, int root_order, std::vector<std::int64_t> exponents);

    // g -> zeta_N on a single cyclic or infinite factor.
    static Character standard(const AbelianGroup& source, int root_order);

    const AbelianGroup& source() const { return source_; }
    int root_order() const { return root_order_; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    std::int64_t exponent(const AbelianGroup::Element& a) const;
    std::int64_t exponent(const std::int64_t* a) const;
    Cyclotomic apply(const AbelianGroup::Element& a) const;

private:
    AbelianGroup source_;
    int root_order_ = 1;
    std::vector<std::int64_t> exponents_;
};

Cyclotomic character_apply(const Character& chi, const AbelianGroup::Element& a);

}  // namespace tsdq
