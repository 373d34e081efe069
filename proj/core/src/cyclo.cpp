#include "heisenrig/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace heisenrig {

namespace {

/// Quotient of exact polynomial division over Z; throws if division is inexact.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    if (den.empty() || den.back() == 0) throw std::logic_error("division by zero polynomial");
    if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t k = num.size(); k-- >= den.size();) {
        BigInt c = num[k];
        if (c == 0) {
            if (k + 1 == den.size()) break;
            continue;
        }
        if (c % den.back() != 0) throw std::logic_error("inexact polynomial division");
        BigInt q = c / den.back();
        std::size_t shift = k - (den.size() - 1);
        quot[shift] = q;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        if (k + 1 == den.size()) break;
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

std::vector<BigInt> poly_mul_z(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

std::vector<BigInt> cyclotomic_poly(std::uint64_t m) {
    if (m < 1 || m > 4096) throw std::invalid_argument("cyclotomic conductor out of range [1,4096]");
    static std::map<std::uint64_t, std::vector<BigInt>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);

    // Compute Phi_d for divisors d | m in increasing order.
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<BigInt> xn_minus_1(d + 1, BigInt(0));
        xn_minus_1[0] = -1;
        xn_minus_1[d] = 1;
        std::vector<BigInt> divisor_product{BigInt(1)};
        for (std::uint64_t e = 1; e < d; ++e)
            if (d % e == 0) divisor_product = poly_mul_z(divisor_product, cache.at(e));
        cache[d] = poly_divide_exact(std::move(xn_minus_1), divisor_product);
    }
    return cache.at(m);
}

namespace detail {

struct FieldData {
    std::uint64_t conductor;
    std::vector<BigInt> phi;        // Phi_m, monic
    std::vector<Rational> phi_q;    // same, rational coefficients
    std::size_t degree;
};

namespace {

std::shared_ptr<const FieldData> field_for(std::uint64_t m) {
    static std::map<std::uint64_t, std::shared_ptr<const FieldData>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto data = std::make_shared<FieldData>();
    data->conductor = m;
    data->phi = cyclotomic_poly(m);
    data->degree = data->phi.size() - 1;
    data->phi_q.reserve(data->phi.size());
    for (const auto& c : data->phi) data->phi_q.emplace_back(c);
    cache[m] = data;
    return data;
}

}  // namespace
}  // namespace detail

CycloField CycloField::make(std::uint64_t conductor) {
    return CycloField(detail::field_for(conductor));
}

std::uint64_t CycloField::conductor() const { return data_->conductor; }
std::size_t CycloField::degree() const { return data_->degree; }
const std::vector<BigInt>& CycloField::minimal_poly() const { return data_->phi; }

CycloNum CycloField::zero() const {
    return CycloNum(*this, std::vector<Rational>(degree(), Rational(0)));
}

CycloNum CycloField::one() const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = 1;
    return CycloNum(*this, std::move(c));
}

CycloNum CycloField::from_rational(const Rational& q) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = q;
    return CycloNum(*this, std::move(c));
}

namespace {

/// Reduce a rational polynomial mod the monic Phi_m, in place; returns the
/// first `degree` coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly,
                                     const std::vector<Rational>& phi) {
    const std::size_t degree = phi.size() - 1;
    if (poly.size() < degree) poly.resize(degree, Rational(0));
    for (std::size_t k = poly.size(); k-- > degree;) {
        Rational c = poly[k];
        if (c == 0) continue;
        std::size_t shift = k - degree;
        for (std::size_t i = 0; i <= degree; ++i) poly[shift + i] -= c * phi[i];
    }
    poly.resize(degree);
    for (auto& q : poly) q.canonicalize();
    return poly;
}

}  // namespace

CycloNum CycloField::root_of_unity(std::int64_t k) const {
    const std::int64_t m = static_cast<std::int64_t>(conductor());
    std::int64_t r = k % m;
    if (r < 0) r += m;
    std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
    poly[static_cast<std::size_t>(r)] = 1;
    return CycloNum(*this, reduce_mod_phi(std::move(poly), data_->phi_q));
}

CycloNum::CycloNum(CycloField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_.degree())
        coeffs_ = reduce_mod_phi(std::move(coeffs_), field_.data_->phi_q);
    for (auto& q : coeffs_) q.canonicalize();
}

bool CycloNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

namespace {

void check_same_field(const CycloNum& a, const CycloNum& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("cyclotomic operands from different conductors");
}

}  // namespace

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return CycloNum(a.field(), std::move(c));
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return CycloNum(a.field(), std::move(c));
}

CycloNum operator-(const CycloNum& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& q : c) q = -q;
    return CycloNum(a.field(), std::move(c));
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    check_same_field(a, b);
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Rational> prod(ca.size() + cb.size() - 1, Rational(0));
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] == 0) continue;
            prod[i + j] += ca[i] * cb[j];
        }
    }
    return CycloNum(a.field(), std::move(prod));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    check_same_field(a, b);
    return a.coeffs() == b.coeffs();
}

namespace {

struct RatPoly {
    std::vector<Rational> c;  // low degree first; normalized: back() != 0 or empty
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    std::size_t deg() const { return c.empty() ? 0 : c.size() - 1; }
};

RatPoly poly_sub_scaled(RatPoly a, const RatPoly& b, const Rational& s, std::size_t shift) {
    if (a.c.size() < b.c.size() + shift) a.c.resize(b.c.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= s * b.c[i];
    a.normalize();
    return a;
}

/// Division with remainder over Q[X].
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    RatPoly q;
    if (b.zero()) throw std::logic_error("polynomial division by zero");
    if (a.c.size() >= b.c.size()) q.c.assign(a.c.size() - b.c.size() + 1, Rational(0));
    while (!a.zero() && a.c.size() >= b.c.size()) {
        Rational s = a.c.back() / b.c.back();
        std::size_t shift = a.c.size() - b.c.size();
        q.c[shift] = s;
        a = poly_sub_scaled(std::move(a), b, s, shift);
    }
    q.normalize();
    return {std::move(q), std::move(a)};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.zero() || b.zero()) return {};
    RatPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.normalize();
    return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Rational(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.normalize();
    return a;
}

}  // namespace

CycloNum CycloNum::inv() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    // Extended gcd of the representative with Phi_m over Q: u*a + v*Phi = gcd.
    // Phi_m is irreducible over Q, so gcd is a nonzero constant.
    RatPoly r0{std::vector<Rational>(field_.data_->phi_q)};
    RatPoly r1{coeffs_};
    r1.normalize();
    RatPoly u0{{}}, u1{{Rational(1)}};
    while (!r1.zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        RatPoly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd (a constant), u0 * a ≡ r0 (mod Phi).
    if (r0.c.size() != 1) throw std::logic_error("cyclotomic gcd is not constant");
    Rational scale = Rational(1) / r0.c[0];
    std::vector<Rational> out(u0.c);
    for (auto& q : out) q *= scale;
    return CycloNum(field_, std::move(out));
}

CycloNum CycloNum::conj() const {
    // conj(sum c_j zeta^j) = sum c_j zeta^(m-j).
    CycloNum out = field_.zero();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        CycloNum term = field_.root_of_unity(-static_cast<std::int64_t>(j));
        std::vector<Rational> scaled(term.coeffs());
        for (auto& q : scaled) q *= coeffs_[j];
        out = out + CycloNum(field_, std::move(scaled));
    }
    return out;
}

std::string CycloNum::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ",";
        out << rational_to_string(coeffs_[i]);
    }
    return out.str();
}

}  // namespace heisenrig
