#include "tsdq/coeffs.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace tsdq {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return detail::mul_checked(a / std::gcd(a, b), b < 0 ? -b : b);
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::vector<std::int64_t> poly_exact_div(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    // den monic
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        std::int64_t c = num[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    return q;
}

std::vector<std::int64_t> compute_cyclotomic(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_exact_div(p, compute_cyclotomic(d));
    return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::mutex mu;
    static std::unordered_map<int, std::vector<std::int64_t>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto p = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------- groups

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    for (auto k : factors_)
        if (k < 0) throw std::invalid_argument("negative cyclic factor");
}

AbelianGroup AbelianGroup::power(const AbelianGroup& a, int times) {
    std::vector<std::int64_t> f;
    for (int t = 0; t < times; ++t) f.insert(f.end(), a.factors_.begin(), a.factors_.end());
    return AbelianGroup(std::move(f));
}

bool AbelianGroup::is_finite() const {
    for (auto k : factors_)
        if (k == 0) return false;
    return true;
}

std::int64_t AbelianGroup::order() const {
    std::int64_t o = 1;
    for (auto k : factors_) {
        if (k == 0) return 0;
        o = detail::mul_checked(o, k);
    }
    return o;
}

AbelianGroup::Element AbelianGroup::reduce(Element a) const {
    if (a.size() != factors_.size()) throw std::invalid_argument("element has wrong rank");
    for (std::size_t c = 0; c < a.size(); ++c) a[c] = reduce_coord(c, a[c]);
    return a;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
    Element r(factors_.size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = reduce_coord(c, detail::add_checked(a[c], b[c]));
    return r;
}

AbelianGroup::Element AbelianGroup::sub(const Element& a, const Element& b) const {
    Element r(factors_.size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = reduce_coord(c, detail::sub_checked(a[c], b[c]));
    return r;
}

AbelianGroup::Element AbelianGroup::neg(const Element& a) const { return sub(zero(), a); }

bool AbelianGroup::contains(const Element& a) const {
    if (a.size() != factors_.size()) return false;
    for (std::size_t c = 0; c < a.size(); ++c)
        if (factors_[c] != 0 && (a[c] < 0 || a[c] >= factors_[c])) return false;
    return true;
}

AbelianGroup::Element AbelianGroup::element_at(std::int64_t index) const {
    if (!is_finite()) throw std::logic_error("cannot enumerate an infinite group");
    Element e(factors_.size());
    for (std::size_t c = factors_.size(); c-- > 0;) {
        e[c] = index % factors_[c];
        index /= factors_[c];
    }
    return e;
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t c = 0; c < factors_.size(); ++c) {
        if (c) s += "+";
        s += factors_[c] == 0 ? std::string("Z") : "Z" + std::to_string(factors_[c]);
    }
    return s;
}

// ------------------------------------------------------------ group ring

void GroupRingElement::add_term(const Key& k, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second = detail::add_checked(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    if (!(base_ == o.base_)) throw std::invalid_argument("group ring bases differ");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    r += o;
    return r;
}

std::int64_t GroupRingElement::augmentation() const {
    std::int64_t s = 0;
    for (const auto& [k, c] : terms_) s = detail::add_checked(s, c);
    return s;
}

// ------------------------------------------------------------ cyclotomics

template <class R>
std::string BasicCyclotomic<R>::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == R(0)) continue;
        R c = coords_[j];
        bool negative = c < R(0);
        if (negative) c = -c;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (j == 0) {
            os << c;
        } else {
            if (c != R(1)) os << c << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

template class BasicCyclotomic<std::int64_t>;
template class BasicCyclotomic<Rational>;

Cyclotomic cyclo_normalize(const std::vector<std::int64_t>& poly, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return Cyclotomic::from_poly(order, poly);
}

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

std::pair<Cyclotomic, Cyclotomic> common_order(const Cyclotomic& a, const Cyclotomic& b) {
    int l = static_cast<int>(lcm64(a.order(), b.order()));
    return {a.lift(l), b.lift(l)};
}

CyclotomicQ to_rational(const Cyclotomic& a) {
    CyclotomicQ r(a.order());
    std::vector<Rational> p(a.coords().begin(), a.coords().end());
    return CyclotomicQ::from_poly(a.order(), std::move(p));
}

CyclotomicQ inverse(const CyclotomicQ& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    const int n = static_cast<int>(a.coords().size());
    const int N = a.order();
    // Column j of the multiplication matrix is a * zeta^j.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        CyclotomicQ col = a * CyclotomicQ::zeta_power(N, j);
        for (int i = 0; i < n; ++i) m[i][j] = col.coords()[i];
    }
    m[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular multiplication matrix");
        std::swap(m[c], m[piv]);
        Rational inv = 1 / m[c][c];
        for (int k = c; k <= n; ++k) m[c][k] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> p(n);
    for (int i = 0; i < n; ++i) p[i] = m[i][n];
    return CyclotomicQ::from_poly(N, std::move(p));
}

void ZetaSum::merge(const ZetaSum& o) {
    if (o.counts_.size() != counts_.size()) throw std::invalid_argument("zeta sums of different order");
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] = detail::add_checked(counts_[k], o.counts_[k]);
}

// ------------------------------------------------------------ characters

Character::Character(AbelianGroup source, int root_order, std::vector<std::int64_t> exponents)
    : source_(std::move(source)), root_order_(root_order), exponents_(std::move(exponents)) {
    if (root_order_ < 1) throw std::invalid_argument("root order must be >= 1");
    if (exponents_.size() != source_.rank()) throw std::invalid_argument("one exponent per factor required");
    for (std::size_t c = 0; c < exponents_.size(); ++c) {
        exponents_[c] = mod_floor(exponents_[c], root_order_);
        std::int64_t k = source_.factors()[c];
        if (k != 0 && mod_floor(detail::mul_checked(exponents_[c], k), root_order_) != 0)
            throw std::invalid_argument("character not well defined on a torsion factor");
    }
}

Character Character::standard(const AbelianGroup& source, int root_order) {
    std::vector<std::int64_t> e(source.rank(), 0);
    for (std::size_t c = 0; c < source.rank(); ++c) {
        std::int64_t k = source.factors()[c];
        // generator to a primitive k-th root inside zeta_N when possible
        e[c] = (k == 0) ? 1 : (root_order % k == 0 ? root_order / k : 0);
        if (k != 0 && root_order % k != 0) throw std::invalid_argument("root order not divisible by factor");
    }
    return Character(source, root_order, std::move(e));
}

std::int64_t Character::exponent(const std::int64_t* a) const {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < exponents_.size(); ++c)
        s = mod_floor(s + mod_floor(a[c], root_order_) * exponents_[c], root_order_);
    return s;
}

std::int64_t Character::exponent(const AbelianGroup::Element& a) const {
    if (!source_.contains(source_.reduce(a))) throw std::invalid_argument("element outside source");
    return exponent(a.data());
}

Cyclotomic Character::apply(const AbelianGroup::Element& a) const {
    if (a.size() != source_.rank()) throw std::invalid_argument("element outside source group");
    return Cyclotomic::zeta_power(root_order_, exponent(a.data()));
}

Cyclotomic character_apply(const Character& chi, const AbelianGroup::Element& a) { return chi.apply(a); }

}  // namespace tsdq
