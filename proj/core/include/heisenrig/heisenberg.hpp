#pragma once

#include "heisenrig/character.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace heisenrig {

/// (x, y, zeta_e^k) with x, y in R^n (tuples of element indices) and the
/// central coordinate stored as an exponent k mod e.
struct GroupElement {
    std::vector<std::uint64_t> x;
    std::vector<std::uint64_t> y;
    std::uint64_t k = 0;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.x == b.x && a.y == b.y && a.k == b.k;
    }
};

namespace detail {
struct GroupData;
}

/// The Heisenberg group H_R = R^n x R^n x mu_R with multiplication
///   (x,y,l)(x',y',m) = (x+x', y+y', l m eps(beta(y',x))),
/// the cocycle orientation under which pi(x,y,l) = l M_y T_x is a
/// homomorphism. Requires a generating eps.
class HeisenbergGroup {
public:
    HeisenbergGroup(FiniteRing ring, std::size_t n, Pairing beta, AdditiveCharacter eps);

    const FiniteRing& ring() const;
    std::size_t rank_n() const;
    const Pairing& pairing() const;
    const AdditiveCharacter& character() const;

    /// e = |mu_R|, the order of eps's image (computed, not assumed).
    std::uint64_t central_order() const;
    /// conductor m of the ambient cyclotomic field.
    std::uint64_t conductor() const;
    /// |R|^{2n} * e.
    std::uint64_t order() const;
    /// |R|^n, the module size (also the Schrodinger dimension).
    std::uint64_t module_size() const;

    GroupElement identity_element() const;
    GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
    GroupElement inverse(const GroupElement& g) const;
    /// a g a^{-1}.
    GroupElement conjugate(const GroupElement& a, const GroupElement& g) const;

    /// Central exponent t (mod e) with zeta_e^t = eps(r); exact because the
    /// image of eps is exactly <zeta_e>.
    std::uint64_t central_exponent_of(std::uint64_t ring_elem) const;
    /// eps(r) as an exponent of zeta_m (conductor m).
    std::uint64_t conductor_exponent_of(std::uint64_t ring_elem) const;

    /// With this cocycle, (0,y,1)(x,0,1)(0,y,1)^{-1} = (x,0,eps(beta(y,x))^sigma).
    int conjugation_sign() const { return -1; }

    /// Element <-> dense index (for enumeration): x + |R|^n (y + |R|^n k).
    std::uint64_t element_index(const GroupElement& g) const;
    GroupElement element_of_index(std::uint64_t index) const;

    /// Generating set: one X- and one Y-generator per additive-basis generator
    /// of R per coordinate, plus the central generator (0,0,zeta_e). For rings
    /// with cyclic additive group this is {(e_i,0,1)} u {(0,e_i,1)} u
    /// {(0,0,zeta_e)}; closure is verified by generate().
    std::vector<GroupElement> generators() const;
    std::vector<GroupElement> x_generators() const;
    std::vector<GroupElement> y_generators() const;
    GroupElement central_generator() const;

    /// Factors g as z^k * prod(y-gens^c) * prod(x-gens^c); returns the
    /// exponents in generator order (x-gens, y-gens, central last).
    std::vector<std::uint64_t> generator_word(const GroupElement& g) const;

    std::string element_name(const GroupElement& g) const;

    bool same_group(const HeisenbergGroup& other) const { return data_ == other.data_; }

private:
    std::shared_ptr<const detail::GroupData> data_;
};

/// All elements in index order; requires order <= cap.
std::vector<GroupElement> enumerate_group(const HeisenbergGroup& group,
                                          std::uint64_t cap = 65536);

/// Closure of the generator set; verifies that the generators generate.
std::vector<GroupElement> generate(const HeisenbergGroup& group, std::uint64_t cap = 65536);

/// Brute-force centre: elements commuting with all generators.
std::vector<GroupElement> centre(const HeisenbergGroup& group, std::uint64_t cap = 65536);

/// True iff the centre is exactly {(0,0,*)}.
bool centre_is_mu_R(const std::vector<GroupElement>& centre_elements);

struct GroupAxiomCertificate {
    bool identity_ok = true;
    bool inverse_ok = true;
    bool associative = true;
    bool cocycle_identity = true;
    bool generators_generate = true;
    bool exhaustive = true;  // false when associativity used generator + random triples
    std::uint64_t triples_checked = 0;
    std::string witness;
    bool ok() const {
        return identity_ok && inverse_ok && associative && cocycle_identity && generators_generate;
    }
};

/// Identity/inverse laws on all elements, associativity exhaustively when
/// order <= exhaustive_cap (else generator triples plus seeded random triples),
/// the 2-cocycle identity, and generator closure.
GroupAxiomCertificate verify_group_axioms(const HeisenbergGroup& group,
                                          std::uint64_t exhaustive_cap = 4096,
                                          std::uint64_t enumeration_cap = 65536,
                                          std::uint64_t random_triples = 512,
                                          std::uint64_t seed = 12345);

}  // namespace heisenrig
