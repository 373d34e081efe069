#pragma once

#include "heisenrig/character.hpp"
#include "heisenrig/matrix.hpp"
#include "heisenrig/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heisenrig {

/// A finite abelian group in mixed-radix coordinates: component i is cyclic of
/// order orders[i]. Elements are single indices.
class AdditiveDomain {
public:
    explicit AdditiveDomain(std::vector<std::uint64_t> orders);
    /// R^n viewed additively; indexing matches index_of_tuple over R^n.
    static AdditiveDomain ring_power(const FiniteRing& ring, std::size_t n);

    std::uint64_t size() const { return size_; }
    const std::vector<std::uint64_t>& orders() const { return orders_; }
    std::uint64_t zero() const { return 0; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;

    bool operator==(const AdditiveDomain& other) const { return orders_ == other.orders_; }

private:
    std::vector<std::uint64_t> orders_;
    std::uint64_t size_;
};

/// A phase: a function from a finite additive domain into a ring, as a table
/// of ring element indices.
struct PhaseFunction {
    AdditiveDomain domain;
    FiniteRing codomain;
    std::vector<std::uint64_t> table;

    PhaseFunction(AdditiveDomain dom, FiniteRing cod, std::vector<std::uint64_t> values);
    bool is_zero() const;
    bool is_constant() const;
    /// phi(x+y) = phi(x) + phi(y) for all x, y (checked exhaustively).
    bool is_additive() const;

    friend bool operator==(const PhaseFunction& a, const PhaseFunction& b) {
        return a.domain == b.domain && a.codomain.same_ring(b.codomain) && a.table == b.table;
    }
};

/// (Delta_h phi)(x) = phi(x+h) - phi(x).
PhaseFunction difference(const PhaseFunction& phi, std::uint64_t h);

/// Delta_{h_1,...,h_k} = Delta_{h_k} ... Delta_{h_1}; the empty list is phi itself.
PhaseFunction iterated_difference(const PhaseFunction& phi,
                                  const std::vector<std::uint64_t>& h_list);

/// Least d such that every (d+1)-fold difference vanishes. Throws if the
/// search exceeds `degree_cap`.
std::size_t additive_degree(const PhaseFunction& phi, std::size_t degree_cap = 8);

/// phi_b(u) = beta(b, u) on R^n.
PhaseFunction linear_phase(const Pairing& beta, const std::vector<std::uint64_t>& b);

struct DefectReport {
    std::size_t degree = 0;       // least d with all (d+1)-fold differences zero
    std::size_t literal_min = 0;  // least k >= 1 with some nonvanishing k-fold; 0 if none exists
    bool additive = false;
    bool constant = false;
    std::size_t tensor_index = 0;                // the k at which the tensor was evaluated
    std::vector<std::uint64_t> tensor_values;    // sorted ring element indices
    /// Set when the "additive => defect 0" normalization was applied or
    /// conflicts with nonzero literal differences.
    bool additive_convention_flag = false;
};

/// Degree invariants plus the defect tensor {Delta_{h_1..h_k} phi(0)} at
/// k = tensor_index (defaults to the additive degree when nullopt).
DefectReport defect_invariants(const PhaseFunction& phi,
                               std::optional<std::size_t> tensor_index = std::nullopt,
                               std::size_t degree_cap = 8);

/// (M_phi f)(x) = chi(phi(x)) f(x): diagonal |A| x |A| matrix over the
/// codomain character's cyclotomic field.
CycloMatrix phase_operator(const PhaseFunction& phi, const AdditiveCharacter& chi);

/// An additive map between domains, as a table of target indices.
struct AdditiveMap {
    AdditiveDomain from;
    AdditiveDomain to;
    std::vector<std::uint64_t> table;

    AdditiveMap(AdditiveDomain f, AdditiveDomain t, std::vector<std::uint64_t> values);
    bool is_additive() const;
    static AdditiveMap identity(const AdditiveDomain& dom);
};

/// f*(phi') = phi' o f. Throws std::invalid_argument if f is not additive.
PhaseFunction pullback(const PhaseFunction& phi_on_target, const AdditiveMap& f);

enum class InteractionLaw {
    /// Operator composition; closure means pointwise-sum closure of the family
    /// (M_phi M_psi = M_{phi+psi}).
    composition,
};

struct PhaseFamily {
    AdditiveDomain domain;
    std::vector<PhaseFunction> members;  // deduplicated, stable order
    InteractionLaw law = InteractionLaw::composition;

    PhaseFamily(AdditiveDomain dom, std::vector<PhaseFunction> phases, InteractionLaw l);
    bool contains(const PhaseFunction& phi) const;
};

/// {phi_b : b in R^n}, deduplicated.
PhaseFamily linear_phase_family(const Pairing& beta);

struct AxiomCheck {
    bool passed = true;
    std::string witness;
};

struct AdmissibleDatumReport {
    AxiomCheck functoriality;      // E1: pullback closure under the supplied morphisms
    AxiomCheck bounded_degree;     // E2: uniform additive-degree bound
    AxiomCheck operator_realised;  // E3: all M_phi constructed and invertible
    AxiomCheck interaction_closed; // E4: closure under the declared interaction
    std::size_t witnessed_degree = 0;
    bool all_passed() const {
        return functoriality.passed && bounded_degree.passed && operator_realised.passed &&
               interaction_closed.passed;
    }
};

/// Checks E1-E4 for the family; failures land in the report, not in errors.
/// `declared_degree_bound`: check against this bound if given, otherwise the
/// witnessed maximum degree is reported.
AdmissibleDatumReport validate_admissible_datum(
    const PhaseFamily& family, const std::vector<AdditiveMap>& morphisms,
    const AdditiveCharacter& chi,
    std::optional<std::size_t> declared_degree_bound = std::nullopt,
    std::size_t degree_cap = 8);

}  // namespace heisenrig
