#pragma once

#include "heisenrig/homspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisenrig {

/// Nested operator sets P_0 <= P_1 <= ... <= P_N as matrices with assigned
/// degrees; P_k consists of all operators of degree <= k.
struct GradedGeneratorSet {
    struct Entry {
        std::size_t degree;
        CycloMatrix matrix;
        std::string name;
    };
    std::vector<Entry> entries;

    std::size_t max_degree() const;
    /// All matrices of degree <= k.
    std::vector<const CycloMatrix*> level(std::size_t k) const;
};

/// The standard grading for the FH phase on a model of dimension |R|^n:
/// the identity at degree 0, every M_y T_x (i.e. rho(x,y,1)) at degree 1.
GradedGeneratorSet fh_graded_set(const Representation& rep);

enum class FiltrationMode { full_module, cyclic };

/// Nested subspaces F_0 <= ... <= F_N (row bases in rref).
struct Filtration {
    std::vector<CycloMatrix> spaces;
    FiltrationMode mode = FiltrationMode::cyclic;
    std::size_t dim_ambient = 0;
};

/// Full-module mode: F_k = sum of column spans of the operators in P_k.
/// Cyclic mode: F_k = span{T v : T in P_k} for the supplied vector.
Filtration induced_filtration(const Representation& rep, const GradedGeneratorSet& gens,
                              FiltrationMode mode,
                              std::optional<std::vector<CycloNum>> cyclic_vector = std::nullopt);

struct FiltrationCertificate {
    bool nesting = true;          // (a)
    bool degree_additive = true;  // (b) rho(P_k) F_l <= F_{k+l}
    bool morphism_compatible = true;  // (c), when a morphism was supplied
    std::string witness;
    bool ok() const { return nesting && degree_additive && morphism_compatible; }
};

/// Rank-test certificates for nesting, degree additivity and (optionally)
/// morphism preservation f(F_k M) <= F_k M'.
FiltrationCertificate verify_filtration_theorem(
    const Filtration& filt, const GradedGeneratorSet& gens,
    const CycloMatrix* morphism = nullptr, const Filtration* target_filtration = nullptr);

struct GradedPiece {
    std::size_t index;
    std::size_t dimension;
    CycloMatrix representatives;  // rows: echelon-complement coset representatives
};

std::vector<GradedPiece> graded_pieces(const Filtration& filt);

struct GradedMorphismReport {
    bool compatible = false;  // f(F_k) <= F'_k for all k
    /// Per level: the induced map gr_k(f) on coset representatives and whether
    /// it is an isomorphism onto gr_k of the target.
    std::vector<CycloMatrix> maps;
    std::vector<bool> invertible;
    bool all_invertible = false;
};

/// Induced maps on boundary strata. Requires a filtration-compatible f
/// (verified first; incompatibility is reported, not thrown).
GradedMorphismReport gr_of_morphism(const CycloMatrix& f, const Filtration& source,
                                    const Filtration& target);

struct BoundaryDecompositionReport {
    bool found = false;
    std::size_t level = 0;
    std::optional<CycloMatrix> witness_projection;
    /// True when the block search space was fully enumerated.
    bool exhausted = false;
    std::vector<std::size_t> block_dimensions;
    std::string note;
};

/// Searches for M = M^{<=k} (+) M^{>k} with M^{<=k} <= F_k and
/// M^{>k} n F_k = 0, over idempotents built from the solver's indecomposable
/// block structure (projections onto subsets of blocks along the rest).
BoundaryDecompositionReport boundary_decomposition_check(const Representation& rep,
                                                         const Filtration& filt, std::size_t k);

}  // namespace heisenrig
