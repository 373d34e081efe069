#include "heisenrig/homspace.hpp"

#include <algorithm>
#include <random>

namespace heisenrig {

namespace {

/// Row basis of the intersection of the kernels of the given matrices.
CycloMatrix kernel_intersection_rows(const CycloField& field, std::size_t dim,
                                     const std::vector<CycloMatrix>& mats) {
    if (mats.empty()) return row_space_basis(CycloMatrix::identity(field, dim));
    CycloMatrix stacked = mats[0];
    for (std::size_t i = 1; i < mats.size(); ++i) stacked = stack_rows(stacked, mats[i]);
    CycloMatrix ker = kernel_basis(stacked);  // columns
    return row_space_basis(ker.transpose());
}

/// Closure of span{v} under the generator matrices; returns an rref row basis.
CycloMatrix cyclic_module_rows(const Representation& rep, const std::vector<CycloNum>& v) {
    const std::size_t dim = rep.dimension();
    CycloMatrix basis(rep.field(), 1, dim);
    for (std::size_t c = 0; c < dim; ++c) basis.set(0, c, v[c]);
    basis = row_space_basis(basis);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& gen : rep.generator_matrices()) {
            for (std::size_t r = 0; r < basis.rows(); ++r) {
                std::vector<CycloNum> image(dim, rep.field().zero());
                for (std::size_t i = 0; i < dim; ++i) {
                    CycloNum acc = rep.field().zero();
                    for (std::size_t j = 0; j < dim; ++j) acc = acc + gen.at(i, j) * basis.at(r, j);
                    image[i] = acc;
                }
                if (!subspace_contains_vector(basis, image)) {
                    CycloMatrix row(rep.field(), 1, dim);
                    for (std::size_t c = 0; c < dim; ++c) row.set(0, c, image[c]);
                    basis = row_space_basis(stack_rows(basis, row));
                    grew = true;
                }
            }
        }
    }
    return basis;
}

std::vector<CycloNum> row_of(const CycloMatrix& m, std::size_t r) {
    std::vector<CycloNum> v;
    v.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

/// Y-fixed vectors within a representation: kernel of (rho(ygen) - I) over all
/// Y-generators.
CycloMatrix y_fixed_rows(const Representation& rep) {
    const HeisenbergGroup& group = rep.group();
    const std::size_t dim = rep.dimension();
    CycloMatrix id = CycloMatrix::identity(rep.field(), dim);
    std::vector<CycloMatrix> constraints;
    for (const auto& ygen : group.y_generators())
        constraints.push_back(rep.matrix(ygen) - id);
    return kernel_intersection_rows(rep.field(), dim, constraints);
}

}  // namespace

HomBasis hom_space(const Representation& rho1, const Representation& rho2,
                   std::size_t unknown_cap, std::uint64_t recheck_seed,
                   std::size_t recheck_count) {
    if (!rho1.group().same_group(rho2.group()))
        throw std::invalid_argument("hom space requires representations of the same group");
    const std::size_t d1 = rho1.dimension(), d2 = rho2.dimension();
    if (d1 * d2 > unknown_cap)
        throw std::invalid_argument("hom solver unknown count exceeds the cap");
    const CycloField& field = rho1.field();
    const auto& gens1 = rho1.generator_matrices();
    const auto& gens2 = rho2.generator_matrices();

    // Unknown T is d2 x d1, vec row-major; constraint per generator g:
    // (T A - B T)[i][j] = sum_k A[k][j] T[i][k] - sum_k B[i][k] T[k][j] = 0.
    CycloMatrix system(field, gens1.size() * d1 * d2, d1 * d2);
    std::size_t row = 0;
    for (std::size_t gi = 0; gi < gens1.size(); ++gi) {
        const CycloMatrix& a = gens1[gi];
        const CycloMatrix& b = gens2[gi];
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j, ++row) {
                for (std::size_t k = 0; k < d1; ++k)
                    system.set(row, i * d1 + k, system.at(row, i * d1 + k) + a.at(k, j));
                for (std::size_t k = 0; k < d2; ++k)
                    system.set(row, k * d1 + j, system.at(row, k * d1 + j) - b.at(i, k));
            }
    }

    CycloMatrix kernel = kernel_basis(system);
    HomBasis result;
    for (std::size_t col = 0; col < kernel.cols(); ++col) {
        CycloMatrix t(field, d2, d1);
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j) t.set(i, j, kernel.at(i * d1 + j, col));
        result.basis.push_back(std::move(t));
    }

    // Generators generate, so the identity extends to the whole group; spot
    // check on random elements.
    std::mt19937_64 rng(recheck_seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, rho1.group().order() - 1);
    for (std::size_t i = 0; i < recheck_count; ++i) {
        GroupElement g = rho1.group().element_of_index(pick(rng));
        CycloMatrix m1 = rho1.matrix(g), m2 = rho2.matrix(g);
        for (const auto& t : result.basis)
            if (!(t * m1 == m2 * t))
                throw std::logic_error("hom basis element fails on a random group element");
    }
    return result;
}

bool schur_check(const Representation& rep, std::size_t unknown_cap) {
    return hom_space(rep, rep, unknown_cap).dimension() == 1;
}

IndecomposabilityReport frobenius_indecomposable(const Representation& rep) {
    IndecomposabilityReport report{};
    CentralCharacterReport central = central_character(rep);
    if (!central.scalar_action) {
        report.status = IndecompStatus::no_central_character;
        // Decompose the central action and report per block.
        const HeisenbergGroup& group = rep.group();
        CycloMatrix mz = rep.matrix(group.central_generator());
        const std::uint64_t step = group.conductor() / group.central_order();
        CycloMatrix id = CycloMatrix::identity(rep.field(), rep.dimension());
        for (std::uint64_t j = 0; j < group.central_order(); ++j) {
            CycloNum eig = rep.field().root_of_unity(static_cast<std::int64_t>(j * step));
            CycloMatrix block =
                kernel_intersection_rows(rep.field(), rep.dimension(), {mz - eig * id});
            if (block.rows() == 0) continue;
            Representation restr = restrict_representation(rep, block);
            report.central_blocks.emplace_back(block.rows(),
                                               hom_space(restr, restr).dimension());
        }
        return report;
    }
    if (!central.centrally_faithful) {
        report.status = IndecompStatus::not_centrally_faithful;
        return report;
    }
    report.end_dimension = hom_space(rep, rep).dimension();
    report.status = report.end_dimension == 1 ? IndecompStatus::indecomposable
                                              : IndecompStatus::decomposable;
    return report;
}

Representation restrict_representation(const Representation& rep, const CycloMatrix& subspace) {
    const std::size_t r = subspace.rows();
    const std::size_t dim = rep.dimension();
    CycloMatrix basis_t = subspace.transpose();  // dim x r, columns = basis vectors
    std::vector<CycloMatrix> restricted;
    for (const auto& gen : rep.generator_matrices()) {
        CycloMatrix image = gen * basis_t;  // dim x r
        CycloMatrix res(rep.field(), r, r);
        for (std::size_t col = 0; col < r; ++col) {
            std::vector<CycloNum> b;
            b.reserve(dim);
            for (std::size_t i = 0; i < dim; ++i) b.push_back(image.at(i, col));
            auto coords = solve(basis_t, b);
            if (!coords) throw std::invalid_argument("subspace is not invariant");
            for (std::size_t i = 0; i < r; ++i) res.set(i, col, (*coords)[i]);
        }
        restricted.push_back(std::move(res));
    }
    return Representation(rep.group(), std::move(restricted), rep.label() + "|sub");
}

SubrepResult find_indecomposable_subrep(const Representation& rep, std::uint64_t omega_exponent) {
    const HeisenbergGroup& group = rep.group();
    if (omega_exponent % group.central_order() == 0)
        throw std::invalid_argument("central character must be nontrivial");
    const std::uint64_t step = group.conductor() / group.central_order();
    CycloMatrix id = CycloMatrix::identity(rep.field(), rep.dimension());
    CycloNum eig = rep.field().root_of_unity(static_cast<std::int64_t>(omega_exponent * step));
    CycloMatrix mz = rep.matrix(group.central_generator());
    CycloMatrix omega_block =
        kernel_intersection_rows(rep.field(), rep.dimension(), {mz - eig * id});
    if (omega_block.rows() == 0)
        return SubrepResult{omega_block, std::nullopt, "omega-isotypic component is zero"};

    Representation block_rep = restrict_representation(rep, omega_block);
    CycloMatrix psi = y_fixed_rows(block_rep);
    if (psi.rows() == 0)
        return SubrepResult{omega_block, restrict_representation(rep, omega_block),
                            "no psi-eigenvector in the omega component"};

    // Cyclic module from a psi-eigenvector; try each echelon vector until the
    // commutant of the block is 1-dimensional.
    std::optional<CycloMatrix> best;
    for (std::size_t r = 0; r < psi.rows(); ++r) {
        CycloMatrix cyclic = cyclic_module_rows(block_rep, row_of(psi, r));
        Representation restr = restrict_representation(block_rep, cyclic);
        if (hom_space(restr, restr).dimension() == 1) {
            CycloMatrix ambient = row_space_basis(cyclic * omega_block);
            return SubrepResult{ambient, restrict_representation(rep, ambient), ""};
        }
        if (!best || cyclic.rows() < best->rows()) best = cyclic;
    }
    CycloMatrix ambient = row_space_basis(*best * omega_block);
    return SubrepResult{ambient, restrict_representation(rep, ambient),
                        "no cyclic block with scalar commutant found"};
}

YIsotypicDecomposition restrict_to_Y(const Representation& rep) {
    YIsotypicDecomposition out;
    const HeisenbergGroup& group = rep.group();
    const FiniteRing& ring = group.ring();
    const std::size_t dim = rep.dimension();
    const std::uint64_t m = group.conductor();
    CycloMatrix id = CycloMatrix::identity(rep.field(), dim);

    auto ygens = group.y_generators();
    std::vector<CycloMatrix> ymats;
    for (const auto& g : ygens) ymats.push_back(rep.matrix(g));
    const auto& basis = ring.additive_basis();
    const std::size_t rank = basis.size() * group.rank_n();

    // Enumerate the characters of Y = R^n by exponent tuples on its basis.
    std::vector<std::uint64_t> exps(rank, 0);
    std::size_t total = 0;
    while (true) {
        std::vector<CycloMatrix> constraints;
        for (std::size_t i = 0; i < rank; ++i) {
            std::uint64_t order = basis[i % basis.size()].order;
            CycloNum value =
                rep.field().root_of_unity(static_cast<std::int64_t>(exps[i] * (m / order)));
            constraints.push_back(ymats[i] - value * id);
        }
        CycloMatrix component = kernel_intersection_rows(rep.field(), dim, constraints);
        if (component.rows() > 0) {
            total += component.rows();
            out.components.push_back(IsotypicComponent{exps, std::move(component)});
        }
        std::size_t i = rank;
        bool done = true;
        while (i-- > 0) {
            if (++exps[i] < basis[i % basis.size()].order) {
                done = false;
                break;
            }
            exps[i] = 0;
        }
        if (done) break;
    }
    out.dimensions_sum = total == dim;

    // X-conjugation permutes the components.
    out.x_permutes = true;
    for (const auto& xg : rep.group().x_generators()) {
        CycloMatrix mx = rep.matrix(xg);
        std::vector<std::size_t> perm;
        for (const auto& comp : out.components) {
            CycloMatrix image = row_space_basis(comp.basis * mx.transpose());
            std::size_t target = out.components.size();
            for (std::size_t j = 0; j < out.components.size(); ++j) {
                if (out.components[j].basis.rows() == image.rows() &&
                    subspace_contains(out.components[j].basis, image)) {
                    target = j;
                    break;
                }
            }
            if (target == out.components.size()) {
                out.x_permutes = false;
                break;
            }
            perm.push_back(target);
        }
        if (!out.x_permutes) break;
        out.x_permutations.push_back(std::move(perm));
    }
    return out;
}

ReciprocityResult reciprocity_check(const Representation& rep) {
    ReciprocityResult result;
    const HeisenbergGroup& group = rep.group();
    Representation induced = induced_representation(group);
    result.hom_dimension = hom_space(induced, rep).dimension();

    // psi-eigenspace of rho|YZ: Y-fixed vectors on which the central generator
    // acts by zeta_e.
    const std::uint64_t step = group.conductor() / group.central_order();
    CycloMatrix id = CycloMatrix::identity(rep.field(), rep.dimension());
    std::vector<CycloMatrix> constraints;
    for (const auto& ygen : group.y_generators()) constraints.push_back(rep.matrix(ygen) - id);
    CycloNum zeta_e = rep.field().root_of_unity(static_cast<std::int64_t>(step));
    constraints.push_back(rep.matrix(group.central_generator()) - zeta_e * id);
    result.eigenspace_dimension =
        kernel_intersection_rows(rep.field(), rep.dimension(), constraints).rows();
    result.match = result.hom_dimension == result.eigenspace_dimension;
    return result;
}

Rational character_inner_product(const Representation& rho1, const Representation& rho2,
                                 std::uint64_t enumeration_cap) {
    const HeisenbergGroup& group = rho1.group();
    if (!group.same_group(rho2.group()))
        throw std::invalid_argument("mixed-group character inner product");
    if (group.order() > enumeration_cap)
        throw std::invalid_argument("group order exceeds the enumeration cap");
    CycloNum sum = rho1.field().zero();
    for (std::uint64_t i = 0; i < group.order(); ++i) {
        GroupElement g = group.element_of_index(i);
        sum = sum + rho1.matrix(g).trace() * rho2.matrix(group.inverse(g)).trace();
    }
    if (!sum.is_rational())
        throw std::logic_error("character inner product is not rational");
    return sum.coeffs()[0] / Rational(static_cast<unsigned long>(group.order()));
}

CycloMatrix equivariant_projector(const Representation& rep, const CycloMatrix& subspace,
                                  std::uint64_t enumeration_cap) {
    const std::size_t dim = rep.dimension();
    const std::size_t r = subspace.rows();
    const CycloField& field = rep.field();

    // Initial projector onto the subspace along the echelon complement.
    RrefResult rr = rref(subspace);
    std::vector<bool> pivot(dim, false);
    for (std::size_t p : rr.pivot_cols) pivot[p] = true;
    CycloMatrix e(field, dim, dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < dim; ++c) e.set(i, c, rr.matrix.at(i, c));
    std::size_t row = r;
    for (std::size_t c = 0; c < dim; ++c)
        if (!pivot[c]) e.set(row++, c, field.one());
    // Columns of e^T are the basis vectors; p0 keeps the first r coordinates.
    CycloMatrix bt = e.transpose();
    CycloMatrix d(field, dim, dim);
    for (std::size_t i = 0; i < r; ++i) d.set(i, i, field.one());
    CycloMatrix p0 = bt * d * inverse(bt);

    // Group averaging: p = (1/|G|) sum_g rho(g) p0 rho(g)^{-1}.
    const HeisenbergGroup& group = rep.group();
    if (group.order() > enumeration_cap)
        throw std::invalid_argument("group order exceeds the enumeration cap");
    CycloMatrix acc(field, dim, dim);
    for (std::uint64_t i = 0; i < group.order(); ++i) {
        GroupElement g = group.element_of_index(i);
        acc = acc + rep.matrix(g) * p0 * rep.matrix(group.inverse(g));
    }
    CycloNum scale = field.from_rational(Rational(1, static_cast<unsigned long>(group.order())));
    return scale * acc;
}

namespace {

std::uint64_t generator_order(const HeisenbergGroup& group, std::size_t gen_index) {
    const auto& basis = group.ring().additive_basis();
    const std::size_t rank = basis.size() * group.rank_n();
    if (gen_index < 2 * rank) return basis[gen_index % basis.size()].order;
    return group.central_order();
}

}  // namespace

DecompositionBlocks decompose_representation(const Representation& rep,
                                             std::uint64_t enumeration_cap) {
    DecompositionBlocks out;
    const HeisenbergGroup& group = rep.group();
    const std::size_t dim = rep.dimension();
    const CycloField& field = rep.field();
    CycloMatrix id = CycloMatrix::identity(field, dim);
    CycloMatrix mz = rep.matrix(group.central_generator());
    const std::uint64_t step = group.conductor() / group.central_order();

    std::size_t covered = 0;
    for (std::uint64_t j = 0; j < group.central_order(); ++j) {
        CycloNum eig = field.root_of_unity(static_cast<std::int64_t>(j * step));
        CycloMatrix block = kernel_intersection_rows(field, dim, {mz - eig * id});
        if (block.rows() == 0) continue;

        if (j == 0) {
            // Trivial central action: the block representation factors through
            // the abelian quotient; split into simultaneous eigenlines.
            Representation restr = restrict_representation(rep, block);
            std::vector<CycloMatrix> pieces{row_space_basis(
                CycloMatrix::identity(field, block.rows()))};
            for (std::size_t gi = 0; gi + 1 < restr.generator_matrices().size(); ++gi) {
                const CycloMatrix& a = restr.generator_matrices()[gi];
                std::uint64_t order = generator_order(group, gi);
                std::vector<CycloMatrix> refined;
                for (const auto& piece : pieces) {
                    CycloMatrix at = piece.transpose();
                    // Restrict a to the piece.
                    CycloMatrix image = a * at;
                    CycloMatrix ares(field, piece.rows(), piece.rows());
                    bool invariant = true;
                    for (std::size_t col = 0; col < piece.rows() && invariant; ++col) {
                        std::vector<CycloNum> b;
                        for (std::size_t i = 0; i < block.rows(); ++i) b.push_back(image.at(i, col));
                        auto coords = solve(at, b);
                        if (!coords) {
                            invariant = false;
                            break;
                        }
                        for (std::size_t i = 0; i < piece.rows(); ++i)
                            ares.set(i, col, (*coords)[i]);
                    }
                    if (!invariant) {
                        refined.push_back(piece);
                        continue;
                    }
                    CycloMatrix pid = CycloMatrix::identity(field, piece.rows());
                    for (std::uint64_t t = 0; t < order; ++t) {
                        CycloNum ev = field.root_of_unity(
                            static_cast<std::int64_t>(t * (group.conductor() / order)));
                        CycloMatrix sub_ker =
                            kernel_intersection_rows(field, piece.rows(), {ares - ev * pid});
                        if (sub_ker.rows() > 0)
                            refined.push_back(row_space_basis(sub_ker * piece));
                    }
                }
                pieces = std::move(refined);
            }
            for (const auto& piece : pieces)
                for (std::size_t r = 0; r < piece.rows(); ++r) {
                    CycloMatrix line(field, 1, piece.cols());
                    for (std::size_t c = 0; c < piece.cols(); ++c) line.set(0, c, piece.at(r, c));
                    out.blocks.push_back(row_space_basis(line * block));
                    covered += 1;
                }
            continue;
        }

        // Nontrivial central character: extract cyclic psi-modules, peeling
        // off averaged invariant complements.
        CycloMatrix current = block;
        while (current.rows() > 0) {
            Representation restr = restrict_representation(rep, current);
            CycloMatrix psi = y_fixed_rows(restr);
            if (psi.rows() == 0) {
                out.blocks.push_back(current);
                covered += current.rows();
                break;
            }
            CycloMatrix cyclic = cyclic_module_rows(restr, row_of(psi, 0));
            if (cyclic.rows() == current.rows()) {
                out.blocks.push_back(current);
                covered += current.rows();
                break;
            }
            CycloMatrix ambient = row_space_basis(cyclic * current);
            out.blocks.push_back(ambient);
            covered += ambient.rows();
            CycloMatrix proj = equivariant_projector(restr, cyclic, enumeration_cap);
            CycloMatrix complement = row_space_basis(kernel_basis(proj).transpose());
            current = row_space_basis(complement * current);
        }
    }
    out.complete = covered == dim;
    return out;
}

namespace {

Representation build_model(const HeisenbergGroup& group, const std::string& name,
                           std::uint64_t seed, std::optional<CycloMatrix>* hidden_conjugator) {
    if (name == "schrodinger") return schrodinger_representation(group);
    if (name == "induced") return induced_representation(group);
    if (name == "fourier") return fourier_model(group);
    std::string base = name.substr(0, name.find(':'));
    if (base == "conjugated") {
        std::uint64_t s = seed;
        auto colon = name.find(':');
        if (colon != std::string::npos) s = std::stoull(name.substr(colon + 1));
        ConjugatedModel cm = conjugated_model(group, s);
        if (hidden_conjugator) *hidden_conjugator = cm.conjugator;
        return cm.rep;
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace

SvnReport stone_von_neumann_verify(const FiniteRing& ring, const SvnConfig& config) {
    SvnReport report;
    FrobeniusCertificate cert = certify_frobenius(ring);
    report.frobenius = cert.frobenius;
    const std::uint64_t dual = module_size(ring, config.n);
    report.dual_size = dual;

    if (!cert.frobenius) {
        for (std::uint64_t w : cert.witnesses)
            report.character_witnesses.push_back(ring.element_name(w));
        // Sharpness diagnostics at n = 1: the best orbit over every character
        // and every pairing value stays below |R|.
        if (ring.size() <= 64) {
            std::size_t best = 0;
            for (const auto& chi : all_characters(ring))
                for (std::uint64_t b = 0; b < ring.size(); ++b) {
                    Pairing beta(ring, 1, {b});
                    best = std::max(best, character_orbit(beta, chi).orbit_size);
                }
            report.max_orbit_over_all = best;
            report.failure_reason = "no generating character; maximal orbit size " +
                                    std::to_string(best) + " < " + std::to_string(ring.size()) +
                                    " over all (B, eps)";
        } else {
            report.failure_reason = "no generating character";
        }
        return report;
    }

    AdditiveCharacter eps = config.character
                                ? AdditiveCharacter(ring, *config.character)
                                : *cert.generating;
    report.generating_character = eps.describe();
    Pairing beta = config.pairing.empty() ? Pairing::identity(ring, config.n)
                                          : Pairing(ring, config.n, config.pairing);

    HeisenbergGroup group(ring, config.n, beta, eps);
    report.central_order = group.central_order();
    report.conjugation_sign = group.conjugation_sign();
    OrbitReport orbit = character_orbit(beta, eps);
    report.orbit_size = orbit.orbit_size;
    report.nondegenerate = is_nondegenerate(beta, eps);

    if (!report.nondegenerate) {
        auto z = centre(group, config.enumeration_cap);
        report.centre_size = z.size();
        for (std::size_t i = 0; i < z.size() && i < 8; ++i)
            report.centre_sample.push_back(z[i]);
        report.failure_reason = "centre exceeds mu_R; orbit size " +
                                std::to_string(orbit.orbit_size);
        return report;
    }

    std::vector<Representation> models;
    std::optional<CycloMatrix> hidden_conjugator;
    std::size_t conjugated_index = config.models.size();
    std::size_t schrodinger_index = config.models.size();
    for (std::size_t i = 0; i < config.models.size(); ++i) {
        const std::string& name = config.models[i];
        if (name.rfind("conjugated", 0) == 0) conjugated_index = i;
        if (name == "schrodinger") schrodinger_index = i;
        models.push_back(build_model(group, name, config.seed, &hidden_conjugator));
    }

    bool pass = true;
    for (const auto& model : models) {
        SvnModelCheck check;
        check.label = model.label();
        CentralCharacterReport central = central_character(model);
        check.central_scalar = central.scalar_action;
        check.central_identity = central.identity_character;
        IndecomposabilityReport ind = frobenius_indecomposable(model);
        check.indecomposable = ind.status == IndecompStatus::indecomposable;
        pass = pass && check.central_scalar && check.central_identity && check.indecomposable;
        report.models.push_back(std::move(check));
    }

    for (std::size_t i = 0; i < models.size(); ++i)
        for (std::size_t j = i + 1; j < models.size(); ++j) {
            SvnPairCheck pair;
            pair.from = models[i].label();
            pair.to = models[j].label();
            HomBasis hom = hom_space(models[i], models[j]);
            pair.hom_dimension = hom.dimension();
            if (hom.dimension() >= 1) {
                pair.witness = hom.basis[0];
                pair.witness_invertible = det_nonzero(hom.basis[0]);
            }
            if (hidden_conjugator &&
                ((i == schrodinger_index && j == conjugated_index) ||
                 (i == conjugated_index && j == schrodinger_index)) &&
                hom.dimension() == 1) {
                // T: pi -> conjugated must equal the hidden conjugator up to one
                // scalar: cross-ratio equality avoids division.
                const CycloMatrix& t = i == schrodinger_index
                                           ? hom.basis[0]
                                           : inverse(hom.basis[0]);
                const CycloMatrix& c = *hidden_conjugator;
                std::size_t i0 = 0, j0 = 0;
                bool found = false;
                for (std::size_t r = 0; r < c.rows() && !found; ++r)
                    for (std::size_t cc = 0; cc < c.cols() && !found; ++cc)
                        if (!c.at(r, cc).is_zero()) {
                            i0 = r;
                            j0 = cc;
                            found = true;
                        }
                bool constant = found;
                for (std::size_t r = 0; r < c.rows() && constant; ++r)
                    for (std::size_t cc = 0; cc < c.cols() && constant; ++cc)
                        constant = t.at(r, cc) * c.at(i0, j0) == c.at(r, cc) * t.at(i0, j0);
                pair.conjugator_recovered = constant;
            }
            pass = pass && pair.hom_dimension == 1 && pair.witness_invertible &&
                   pair.conjugator_recovered.value_or(true);
            report.pairs.push_back(std::move(pair));
        }

    report.pass = pass;
    if (!pass && report.failure_reason.empty())
        report.failure_reason = "model or intertwiner check failed";
    return report;
}

}  // namespace heisenrig
