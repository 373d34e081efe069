#pragma once

#include "heisenrig/schrodinger.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisenrig {

/// Basis of Hom_{H_R}(rho1, rho2) = {T : T rho1(g) = rho2(g) T for all g}.
struct HomBasis {
    std::vector<CycloMatrix> basis;  // each dim2 x dim1
    std::size_t dimension() const { return basis.size(); }
};

/// Kernel of the stacked intertwining system over the group generators.
/// The identity then holds on the whole group since generators generate;
/// each basis element is re-checked on seeded random elements.
HomBasis hom_space(const Representation& rho1, const Representation& rho2,
                   std::size_t unknown_cap = 4096, std::uint64_t recheck_seed = 12345,
                   std::size_t recheck_count = 8);

/// dim End(rep) == 1.
bool schur_check(const Representation& rep, std::size_t unknown_cap = 4096);

enum class IndecompStatus {
    indecomposable,
    decomposable,
    not_centrally_faithful,
    no_central_character,
};

struct IndecomposabilityReport {
    IndecompStatus status;
    std::size_t end_dimension = 0;  // dim End when the centre acts by scalars
    /// When the centre does not act by one scalar character: per-central-block
    /// (dimension, dim End of the block restriction).
    std::vector<std::pair<std::size_t, std::size_t>> central_blocks;
};

/// When the centre acts by a fixed nontrivial scalar character, Frobenius
/// indecomposability coincides with dim End = 1 (complete reducibility over C
/// plus automatic central faithfulness of invariant subspaces); otherwise the
/// central action is decomposed and reported per block.
IndecomposabilityReport frobenius_indecomposable(const Representation& rep);

/// Row basis (rref) of an invariant subspace together with the restricted
/// representation.
struct SubrepResult {
    CycloMatrix subspace;  // rows form an rref basis
    std::optional<Representation> restriction;
    std::string note;
};

/// Projects to the omega-isotypic component of the centre (omega = k -> zeta_e^{ck}),
/// then extracts a minimal centrally faithful invariant block by generating a
/// cyclic module from a psi-eigenvector. Throws std::invalid_argument for the
/// trivial omega; reports a zero component in `note`.
SubrepResult find_indecomposable_subrep(const Representation& rep, std::uint64_t omega_exponent = 1);

struct IsotypicComponent {
    std::vector<std::uint64_t> character_key;  // exponents on the Y-basis generators
    CycloMatrix basis;                         // rows span V_phi
};

struct YIsotypicDecomposition {
    std::vector<IsotypicComponent> components;
    bool dimensions_sum = false;
    /// For each X-generator, the permutation it induces on the components;
    /// empty when some image failed to match a component.
    std::vector<std::vector<std::size_t>> x_permutations;
    bool x_permutes = false;
};

/// Simultaneous eigenspace decomposition under the commuting finite-order
/// matrices rho(0, g, 1); eigenspaces are kernels of (rho(g) - zeta^k I).
YIsotypicDecomposition restrict_to_Y(const Representation& rep);

struct ReciprocityResult {
    std::size_t hom_dimension = 0;        // dim Hom(Ind psi, rho), by the solver
    std::size_t eigenspace_dimension = 0; // dim of the psi-eigenspace of rho|YZ
    bool match = false;
};

/// Frobenius reciprocity cross-check: solver dimension against the direct
/// psi-eigenspace computation.
ReciprocityResult reciprocity_check(const Representation& rep);

/// (1/|G|) sum_g trace rho1(g) * trace rho2(g^{-1}), exact. The result of two
/// genuine representations is a nonnegative rational integer.
Rational character_inner_product(const Representation& rho1, const Representation& rho2,
                                 std::uint64_t enumeration_cap = 65536);

/// Equivariant projector onto the invariant subspace spanned by the rows of
/// `subspace`, built by group averaging; its kernel is an invariant complement.
CycloMatrix equivariant_projector(const Representation& rep, const CycloMatrix& subspace,
                                  std::uint64_t enumeration_cap = 65536);

/// Restriction of the representation to an invariant row-space.
Representation restrict_representation(const Representation& rep, const CycloMatrix& subspace);

struct DecompositionBlocks {
    std::vector<CycloMatrix> blocks;  // row bases of indecomposable invariant summands
    bool complete = false;            // block dimensions sum to dim V
};

/// Full decomposition into indecomposable invariant summands: central
/// eigenspace split first, then cyclic psi-modules with averaged complements
/// (nontrivial central blocks) or simultaneous abelian eigenlines (trivial
/// central blocks).
DecompositionBlocks decompose_representation(const Representation& rep,
                                             std::uint64_t enumeration_cap = 65536);

struct SvnModelCheck {
    std::string label;
    bool central_scalar = false;
    bool central_identity = false;
    bool indecomposable = false;
};

struct SvnPairCheck {
    std::string from, to;
    std::size_t hom_dimension = 0;
    bool witness_invertible = false;
    std::optional<CycloMatrix> witness;  // the chosen intertwiner, when one exists
    /// Only set on the schrodinger/conjugated pair: the recovered intertwiner
    /// equals the hidden conjugator up to one scalar.
    std::optional<bool> conjugator_recovered;
};

struct SvnReport {
    bool frobenius = false;
    bool nondegenerate = false;
    bool pass = false;
    std::string failure_reason;
    std::string generating_character;        // description, when found
    std::size_t orbit_size = 0;
    std::uint64_t dual_size = 0;
    std::optional<std::size_t> centre_size;  // brute-force centre, on degenerate runs
    std::vector<GroupElement> centre_sample;  // first few centre elements, degenerate runs
    std::uint64_t central_order = 0;         // |mu_R|
    int conjugation_sign = -1;               // sigma in (0,y,1)(x,0,1)(0,y,1)^{-1}
    /// Non-Frobenius diagnostics: max orbit size over all characters and all
    /// rank-1 pairings.
    std::optional<std::size_t> max_orbit_over_all;
    std::vector<std::string> character_witnesses;
    std::vector<SvnModelCheck> models;
    std::vector<SvnPairCheck> pairs;
};

struct SvnConfig {
    std::size_t n = 1;
    std::vector<std::uint64_t> pairing;             // empty = identity
    std::optional<std::vector<std::uint64_t>> character;  // exponent tuple; empty = auto
    std::vector<std::string> models = {"schrodinger", "induced", "fourier", "conjugated"};
    std::uint64_t seed = 12345;
    std::uint64_t enumeration_cap = 65536;
};

/// The full uniqueness pipeline. Failure modes (non-Frobenius ring, degenerate
/// pairing) are documented in the report, not raised.
SvnReport stone_von_neumann_verify(const FiniteRing& ring, const SvnConfig& config = {});

}  // namespace heisenrig
