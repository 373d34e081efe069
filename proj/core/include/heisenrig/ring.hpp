#pragma once

#include "heisenrig/ring_spec.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace heisenrig {

/// One structural generator of (R,+): the element (by canonical index) and its
/// additive order. The direct sum of the cyclic groups generated by these is all
/// of (R,+), and the mixed-radix expansion over their orders is the canonical
/// element encoding.
struct AdditiveGenerator {
    std::uint64_t element;
    std::uint64_t order;
};

namespace detail {
struct RingData;
}

class RingElem;

/// A finite commutative ring with enumerable elements, built from a RingSpec.
/// Value type with shared immutable state; copies refer to the same ring.
class FiniteRing {
public:
    static constexpr std::uint64_t kDefaultElementCap = 65536;

    /// Builds the ring. Table atoms are verified exhaustively (associativity,
    /// commutativity, existence of 1); structural atoms are correct by
    /// construction. Throws std::invalid_argument on cap overflow or a bad table.
    static FiniteRing build(const RingSpec& spec, std::uint64_t element_cap = kDefaultElementCap);
    static FiniteRing build(const std::string& spec_text,
                            std::uint64_t element_cap = kDefaultElementCap);

    std::uint64_t size() const;
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    /// Structural additive basis; orders multiply to size().
    const std::vector<AdditiveGenerator>& additive_basis() const;
    /// lcm of the additive-basis orders.
    std::uint64_t additive_exponent() const;

    /// Mixed-radix coordinates of an element over the additive basis.
    std::vector<std::uint64_t> coords(std::uint64_t index) const;
    std::uint64_t from_coords(const std::vector<std::uint64_t>& c) const;

    std::string element_name(std::uint64_t index) const;
    const RingSpec& spec() const;
    std::string spec_text() const;

    bool same_ring(const FiniteRing& other) const { return data_ == other.data_; }

    RingElem elem(std::uint64_t index) const;

private:
    explicit FiniteRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::RingData> data_;
};

/// An element of a specific FiniteRing. Arithmetic between elements of
/// different rings throws std::invalid_argument.
class RingElem {
public:
    RingElem(FiniteRing ring, std::uint64_t index) : ring_(std::move(ring)), index_(index) {
        if (index_ >= ring_.size()) throw std::invalid_argument("ring element index out of range");
    }

    const FiniteRing& ring() const { return ring_; }
    std::uint64_t index() const { return index_; }
    std::string name() const { return ring_.element_name(index_); }

    friend RingElem operator+(const RingElem& a, const RingElem& b) {
        check_same(a, b);
        return RingElem(a.ring_, a.ring_.add(a.index_, b.index_));
    }
    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        check_same(a, b);
        return RingElem(a.ring_, a.ring_.mul(a.index_, b.index_));
    }
    friend RingElem operator-(const RingElem& a) { return RingElem(a.ring_, a.ring_.neg(a.index_)); }
    friend RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }
    friend bool operator==(const RingElem& a, const RingElem& b) {
        check_same(a, b);
        return a.index_ == b.index_;
    }

private:
    static void check_same(const RingElem& a, const RingElem& b) {
        if (!a.ring_.same_ring(b.ring_)) throw std::invalid_argument("mixed-ring operands");
    }
    FiniteRing ring_;
    std::uint64_t index_;
};

/// All elements in canonical index order, length |R|.
std::vector<RingElem> enumerate_elements(const FiniteRing& ring);

/// {r*s : s in R} as a sorted set of element indices.
std::vector<std::uint64_t> principal_ideal(const FiniteRing& ring, std::uint64_t r);

/// Exhaustive ring-axiom certificate (used by tests and by the table builder).
struct RingAxiomReport {
    bool commutative = true;
    bool associative_add = true;
    bool associative_mul = true;
    bool distributive = true;
    bool has_one = true;
    bool additive_inverse = true;
    std::string witness;  // first violating triple, if any
    bool ok() const {
        return commutative && associative_add && associative_mul && distributive && has_one &&
               additive_inverse;
    }
};

RingAxiomReport verify_ring_axioms(const FiniteRing& ring);

}  // namespace heisenrig
