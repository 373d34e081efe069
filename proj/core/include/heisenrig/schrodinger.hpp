#pragma once

#include "heisenrig/heisenberg.hpp"
#include "heisenrig/matrix.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heisenrig {

/// Basis convention, fixed once: T_x delta_a = delta_{a-x}, derived from
/// (T_x f)(u) = f(u+x). Every module reads this convention from here.
/// Basis vectors delta_u are indexed by index_of_tuple(u).

/// Permutation matrix of T_x on S_R.
CycloMatrix translation_matrix(const HeisenbergGroup& group, const std::vector<std::uint64_t>& x);

/// Diagonal matrix of M_y: entries eps(beta(y,u)).
CycloMatrix modulation_matrix(const HeisenbergGroup& group, const std::vector<std::uint64_t>& y);

/// A representation of H_R by invertible cyclotomic matrices, stored on the
/// group generators plus an evaluator for arbitrary elements.
class Representation {
public:
    /// Generic model: generator matrices in the order of group.generators()
    /// (x-gens, y-gens, central); evaluation factors elements through them.
    Representation(HeisenbergGroup group, std::vector<CycloMatrix> generator_matrices,
                   std::string label);
    /// Model with a closed-form evaluator; generator matrices are derived.
    Representation(HeisenbergGroup group, std::size_t dimension,
                   std::function<CycloMatrix(const GroupElement&)> closed_form, std::string label);

    const HeisenbergGroup& group() const { return group_; }
    std::size_t dimension() const { return dimension_; }
    const std::string& label() const { return label_; }
    const CycloField& field() const { return field_; }
    const std::vector<CycloMatrix>& generator_matrices() const { return gen_matrices_; }

    /// rho(g): closed form when available, else generator-word factorization.
    CycloMatrix matrix(const GroupElement& g) const;
    /// Always evaluates by generator-word factorization (cross-check path).
    CycloMatrix matrix_by_word(const GroupElement& g) const;
    bool has_closed_form() const { return static_cast<bool>(closed_form_); }

private:
    HeisenbergGroup group_;
    std::size_t dimension_;
    CycloField field_;
    std::vector<CycloMatrix> gen_matrices_;
    std::function<CycloMatrix(const GroupElement&)> closed_form_;
    std::string label_;
};

/// pi(x,y,lambda) = lambda M_y T_x on S_R.
CycloMatrix pi_matrix(const HeisenbergGroup& group, const GroupElement& g);
Representation schrodinger_representation(const HeisenbergGroup& group);

/// The 1-dimensional trivial representation.
Representation trivial_representation(const HeisenbergGroup& group);

/// Block-diagonal direct sum.
Representation direct_sum(const Representation& a, const Representation& b);

struct WeylCertificate {
    bool holds = true;
    bool exhaustive = true;
    std::uint64_t pairs_checked = 0;
    std::string witness;  // first violating (x, y) pair
};

/// T_x M_y = eps(beta(y,x)) M_y T_x for all (x,y) pairs (all of R^n x R^n when
/// |R|^n <= pair_cap, else generator pairs).
WeylCertificate verify_weyl(const HeisenbergGroup& group, std::uint64_t pair_cap = 16);

struct HomomorphismCertificate {
    bool holds = true;
    bool exhaustive = true;
    std::uint64_t pairs_checked = 0;
    std::uint64_t inverses_checked = 0;
    std::string witness;
};

/// rho(gh) = rho(g)rho(h): exhaustive over all pairs when |H_R| <= group_cap,
/// else generator pairs plus seeded random pairs. Also rho(g^{-1}) = rho(g)^{-1}
/// on sampled elements.
HomomorphismCertificate verify_homomorphism(const Representation& rep,
                                            std::uint64_t group_cap = 4096,
                                            std::uint64_t random_pairs = 256,
                                            std::uint64_t seed = 12345);

struct CentralCharacterReport {
    bool scalar_action = true;   // centre acts by scalars
    bool identity_character = false;  // scalar at (0,0,zeta^k) equals zeta^k
    bool centrally_faithful = false;  // character nontrivial
    std::vector<CycloNum> scalars;    // scalar per central exponent k (when scalar_action)
    std::string witness;
};

/// Verifies rho(0,0,zeta^k) is scalar for all k and classifies the character.
CentralCharacterReport central_character(const Representation& rep);

/// Induced model from the abelian subgroup YZ with character psi(0,y,lambda)
/// = lambda: basis indexed by the coset representatives (x,0,1), action
/// rho(a,b,lambda) e_x = lambda eps(beta(b,a+x))^{-1} e_{a+x}.
Representation induced_representation(const HeisenbergGroup& group);

struct InducedIso {
    CycloMatrix intertwiner;  // induced basis -> S_R; sends e_0 to delta_0
    bool equivariant = true;
    bool bijective = true;
};

/// The canonical equivariant isomorphism from the induced model onto the
/// Schrodinger model, built by extending e_0 -> delta_0 along the X-action.
InducedIso induced_iso(const HeisenbergGroup& group);

/// Fourier kernel F[v,u] = eps(beta(v,u)). Invertible exactly when the
/// character orbit is full; throws std::domain_error otherwise.
CycloMatrix fourier_kernel(const HeisenbergGroup& group);

/// F pi(.) F^{-1}, stored on generators only (no trace of F in the model).
Representation fourier_model(const HeisenbergGroup& group);

/// Conjugate of pi by a seeded pseudorandom invertible rational matrix.
/// The conjugator is returned separately; the model itself carries no hint of it.
struct ConjugatedModel {
    Representation rep;
    CycloMatrix conjugator;
};
ConjugatedModel conjugated_model(const HeisenbergGroup& group, std::uint64_t seed);

}  // namespace heisenrig
