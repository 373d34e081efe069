#pragma once

#include "heisenrig/cyclo.hpp"
#include "heisenrig/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heisenrig {

/// An additive character of (R,+), stored as one exponent per additive-basis
/// generator: eps(g_i) = zeta_{o_i}^{a_i}. Values live in Q(zeta_m) with
/// m the additive exponent of R.
class AdditiveCharacter {
public:
    AdditiveCharacter(FiniteRing ring, std::vector<std::uint64_t> exponents);

    const FiniteRing& ring() const { return ring_; }
    std::uint64_t conductor() const { return conductor_; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }

    /// eps(x) = zeta_m^exponent_of(x); all arithmetic stays on integer exponents.
    std::uint64_t exponent_of(std::uint64_t elem) const;
    CycloNum value(std::uint64_t elem) const;
    bool is_trivial() const;

    /// Pointwise product / inverse (the dual-group operations).
    AdditiveCharacter product(const AdditiveCharacter& other) const;
    AdditiveCharacter inverse() const;

    std::string describe() const;

    friend bool operator==(const AdditiveCharacter& a, const AdditiveCharacter& b) {
        return a.ring_.same_ring(b.ring_) && a.exponents_ == b.exponents_;
    }

private:
    FiniteRing ring_;
    std::uint64_t conductor_;
    CycloField field_;
    std::vector<std::uint64_t> exponents_;
};

/// All |R| additive characters, enumerated in lexicographic exponent order.
std::vector<AdditiveCharacter> all_characters(const FiniteRing& ring);

/// True iff for every nonzero r there is s with eps(r s) != 1, i.e. the kernel
/// of eps contains no nonzero ideal.
bool is_generating(const AdditiveCharacter& chi);

struct FrobeniusCertificate {
    bool frobenius = false;
    std::optional<AdditiveCharacter> generating;  // set on success
    /// On failure: for each character (in enumeration order), a nonzero r
    /// with eps(rR) = {1}.
    std::vector<std::uint64_t> witnesses;

    std::string describe(const FiniteRing& ring) const;
};

/// Searches all characters in lexicographic exponent order; returns the first
/// generating one, else one ideal witness per character.
FrobeniusCertificate certify_frobenius(const FiniteRing& ring);

/// beta(y, x) = sum_{i,j} y_i B_{ij} x_j over R, with B an n x n matrix of
/// ring elements (row-major indices).
class Pairing {
public:
    Pairing(FiniteRing ring, std::size_t n, std::vector<std::uint64_t> matrix);

    static Pairing identity(const FiniteRing& ring, std::size_t n);
    static Pairing zero(const FiniteRing& ring, std::size_t n);

    const FiniteRing& ring() const { return ring_; }
    std::size_t rank_n() const { return n_; }
    const std::vector<std::uint64_t>& matrix() const { return matrix_; }

    /// Tuples are vectors of ring element indices of length n.
    std::uint64_t evaluate(const std::vector<std::uint64_t>& y,
                           const std::vector<std::uint64_t>& x) const;

private:
    FiniteRing ring_;
    std::size_t n_;
    std::vector<std::uint64_t> matrix_;
};

/// Index <-> tuple helpers for R^n (little-endian base |R|).
std::vector<std::uint64_t> tuple_of_index(const FiniteRing& ring, std::size_t n,
                                          std::uint64_t index);
std::uint64_t index_of_tuple(const FiniteRing& ring, const std::vector<std::uint64_t>& tuple);
std::uint64_t module_size(const FiniteRing& ring, std::size_t n);

/// Both one-sided nondegeneracy conditions, checked exhaustively over R^n:
/// for every nonzero x some y has eps(beta(y,x)) != 1, and symmetrically.
bool is_nondegenerate(const Pairing& beta, const AdditiveCharacter& chi);

/// beta(a,b) = beta(b,a) for all tuples (exhaustive).
bool is_symmetric(const Pairing& beta);

struct OrbitReport {
    std::size_t orbit_size = 0;
    std::uint64_t dual_size = 0;  // |R|^n
    bool full = false;
};

/// The set of characters of (R^n,+) of the form x -> eps(beta(y,x)), y in R^n.
/// Characters are canonicalized by their exponent tuples on the additive basis
/// of R^n before counting.
OrbitReport character_orbit(const Pairing& beta, const AdditiveCharacter& chi);

}  // namespace heisenrig
