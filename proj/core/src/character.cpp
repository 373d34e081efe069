#include "heisenrig/character.hpp"

#include <set>
#include <sstream>

namespace heisenrig {

AdditiveCharacter::AdditiveCharacter(FiniteRing ring, std::vector<std::uint64_t> exponents)
    : ring_(std::move(ring)),
      conductor_(ring_.additive_exponent()),
      field_(CycloField::make(conductor_)),
      exponents_(std::move(exponents)) {
    const auto& basis = ring_.additive_basis();
    if (exponents_.size() != basis.size())
        throw std::invalid_argument("character exponent tuple has wrong length");
    for (std::size_t i = 0; i < basis.size(); ++i) exponents_[i] %= basis[i].order;
}

std::uint64_t AdditiveCharacter::exponent_of(std::uint64_t elem) const {
    const auto& basis = ring_.additive_basis();
    auto c = ring_.coords(elem);
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // eps(g_i) = zeta_{o_i}^{a_i} = zeta_m^{a_i * m / o_i}
        std::uint64_t step = conductor_ / basis[i].order;
        e = (e + exponents_[i] * c[i] % conductor_ * step) % conductor_;
    }
    return e;
}

CycloNum AdditiveCharacter::value(std::uint64_t elem) const {
    return field_.root_of_unity(static_cast<std::int64_t>(exponent_of(elem)));
}

bool AdditiveCharacter::is_trivial() const {
    for (std::uint64_t a : exponents_)
        if (a != 0) return false;
    return true;
}

AdditiveCharacter AdditiveCharacter::product(const AdditiveCharacter& other) const {
    if (!ring_.same_ring(other.ring_)) throw std::invalid_argument("mixed-ring characters");
    const auto& basis = ring_.additive_basis();
    std::vector<std::uint64_t> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (e[i] + other.exponents_[i]) % basis[i].order;
    return AdditiveCharacter(ring_, std::move(e));
}

AdditiveCharacter AdditiveCharacter::inverse() const {
    const auto& basis = ring_.additive_basis();
    std::vector<std::uint64_t> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (basis[i].order - e[i]) % basis[i].order;
    return AdditiveCharacter(ring_, std::move(e));
}

std::string AdditiveCharacter::describe() const {
    const auto& basis = ring_.additive_basis();
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) out << ", ";
        out << "eps(" << ring_.element_name(basis[i].element) << ")=zeta" << basis[i].order << "^"
            << exponents_[i];
    }
    return out.str();
}

std::vector<AdditiveCharacter> all_characters(const FiniteRing& ring) {
    const auto& basis = ring.additive_basis();
    std::vector<AdditiveCharacter> out;
    out.reserve(ring.size());
    std::vector<std::uint64_t> e(basis.size(), 0);
    while (true) {
        out.emplace_back(ring, e);
        // Lexicographic increment, most significant exponent first.
        std::size_t i = basis.size();
        while (i-- > 0) {
            if (++e[i] < basis[i].order) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (basis.empty()) return out;
    }
}

bool is_generating(const AdditiveCharacter& chi) {
    const FiniteRing& ring = chi.ring();
    for (std::uint64_t r = 1; r < ring.size(); ++r) {
        bool kills_ideal = true;
        for (std::uint64_t s = 0; s < ring.size() && kills_ideal; ++s)
            if (chi.exponent_of(ring.mul(r, s)) != 0) kills_ideal = false;
        if (kills_ideal) return false;
    }
    return true;
}

FrobeniusCertificate certify_frobenius(const FiniteRing& ring) {
    FrobeniusCertificate cert;
    auto chars = all_characters(ring);
    std::vector<std::uint64_t> witnesses;
    for (const auto& chi : chars) {
        std::uint64_t witness = 0;
        for (std::uint64_t r = 1; r < ring.size() && witness == 0; ++r) {
            bool kills_ideal = true;
            for (std::uint64_t s = 0; s < ring.size() && kills_ideal; ++s)
                if (chi.exponent_of(ring.mul(r, s)) != 0) kills_ideal = false;
            if (kills_ideal) witness = r;
        }
        if (witness == 0) {
            cert.frobenius = true;
            cert.generating = chi;
            return cert;
        }
        witnesses.push_back(witness);
    }
    cert.frobenius = false;
    cert.witnesses = std::move(witnesses);
    return cert;
}

std::string FrobeniusCertificate::describe(const FiniteRing& ring) const {
    std::ostringstream out;
    if (frobenius) {
        out << "Frobenius with generating character " << generating->describe();
    } else {
        out << "not Frobenius; per-character ideal witnesses:";
        for (std::size_t i = 0; i < witnesses.size(); ++i)
            out << " [" << i << "] r=" << ring.element_name(witnesses[i]);
    }
    return out.str();
}

Pairing::Pairing(FiniteRing ring, std::size_t n, std::vector<std::uint64_t> matrix)
    : ring_(std::move(ring)), n_(n), matrix_(std::move(matrix)) {
    if (n_ == 0) throw std::invalid_argument("pairing rank must be >= 1");
    if (matrix_.size() != n_ * n_) throw std::invalid_argument("pairing matrix must be n x n");
    for (std::uint64_t e : matrix_)
        if (e >= ring_.size()) throw std::invalid_argument("pairing entry out of range");
}

Pairing Pairing::identity(const FiniteRing& ring, std::size_t n) {
    std::vector<std::uint64_t> m(n * n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = ring.one();
    return Pairing(ring, n, std::move(m));
}

Pairing Pairing::zero(const FiniteRing& ring, std::size_t n) {
    return Pairing(ring, n, std::vector<std::uint64_t>(n * n, ring.zero()));
}

std::uint64_t Pairing::evaluate(const std::vector<std::uint64_t>& y,
                                const std::vector<std::uint64_t>& x) const {
    if (y.size() != n_ || x.size() != n_) throw std::invalid_argument("tuple length mismatch");
    std::uint64_t acc = ring_.zero();
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            acc = ring_.add(acc, ring_.mul(ring_.mul(y[i], matrix_[i * n_ + j]), x[j]));
    return acc;
}

std::vector<std::uint64_t> tuple_of_index(const FiniteRing& ring, std::size_t n,
                                          std::uint64_t index) {
    std::vector<std::uint64_t> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = index % ring.size();
        index /= ring.size();
    }
    return t;
}

std::uint64_t index_of_tuple(const FiniteRing& ring, const std::vector<std::uint64_t>& tuple) {
    std::uint64_t index = 0;
    for (std::size_t i = tuple.size(); i-- > 0;) index = index * ring.size() + tuple[i];
    return index;
}

std::uint64_t module_size(const FiniteRing& ring, std::size_t n) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= ring.size();
    return s;
}

bool is_nondegenerate(const Pairing& beta, const AdditiveCharacter& chi) {
    const FiniteRing& ring = beta.ring();
    const std::size_t n = beta.rank_n();
    const std::uint64_t size = module_size(ring, n);
    for (std::uint64_t xi = 1; xi < size; ++xi) {
        auto x = tuple_of_index(ring, n, xi);
        bool hit = false;
        for (std::uint64_t yi = 0; yi < size && !hit; ++yi)
            hit = chi.exponent_of(beta.evaluate(tuple_of_index(ring, n, yi), x)) != 0;
        if (!hit) return false;
    }
    for (std::uint64_t yi = 1; yi < size; ++yi) {
        auto y = tuple_of_index(ring, n, yi);
        bool hit = false;
        for (std::uint64_t xi = 0; xi < size && !hit; ++xi)
            hit = chi.exponent_of(beta.evaluate(y, tuple_of_index(ring, n, xi))) != 0;
        if (!hit) return false;
    }
    return true;
}

bool is_symmetric(const Pairing& beta) {
    const FiniteRing& ring = beta.ring();
    const std::uint64_t size = module_size(ring, beta.rank_n());
    for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = a + 1; b < size; ++b) {
            auto ta = tuple_of_index(ring, beta.rank_n(), a);
            auto tb = tuple_of_index(ring, beta.rank_n(), b);
            if (beta.evaluate(ta, tb) != beta.evaluate(tb, ta)) return false;
        }
    return true;
}

OrbitReport character_orbit(const Pairing& beta, const AdditiveCharacter& chi) {
    const FiniteRing& ring = beta.ring();
    const std::size_t n = beta.rank_n();
    const std::uint64_t size = module_size(ring, n);
    const auto& basis = ring.additive_basis();

    // Canonical key of the twist character x -> eps(beta(y,x)): its exponents
    // on the additive basis generators of R^n.
    std::set<std::vector<std::uint64_t>> orbit;
    for (std::uint64_t yi = 0; yi < size; ++yi) {
        auto y = tuple_of_index(ring, n, yi);
        std::vector<std::uint64_t> key;
        key.reserve(n * basis.size());
        for (std::size_t coord = 0; coord < n; ++coord) {
            for (const auto& gen : basis) {
                std::vector<std::uint64_t> x(n, ring.zero());
                x[coord] = gen.element;
                std::uint64_t e = chi.exponent_of(beta.evaluate(y, x));
                // Reduce to an exponent mod the generator order.
                std::uint64_t step = chi.conductor() / gen.order;
                key.push_back((e / step) % gen.order);
            }
        }
        orbit.insert(std::move(key));
    }
    OrbitReport rep;
    rep.orbit_size = orbit.size();
    rep.dual_size = size;
    rep.full = rep.orbit_size == size;
    return rep;
}

}  // namespace heisenrig
