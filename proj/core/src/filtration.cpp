#include "heisenrig/filtration.hpp"

namespace heisenrig {

std::size_t GradedGeneratorSet::max_degree() const {
    std::size_t n = 0;
    for (const auto& e : entries) n = std::max(n, e.degree);
    return n;
}

std::vector<const CycloMatrix*> GradedGeneratorSet::level(std::size_t k) const {
    std::vector<const CycloMatrix*> out;
    for (const auto& e : entries)
        if (e.degree <= k) out.push_back(&e.matrix);
    return out;
}

GradedGeneratorSet fh_graded_set(const Representation& rep) {
    const HeisenbergGroup& group = rep.group();
    const FiniteRing& ring = group.ring();
    const std::size_t n = group.rank_n();
    GradedGeneratorSet gens;
    gens.entries.push_back({0, CycloMatrix::identity(rep.field(), rep.dimension()), "scalar"});
    const std::uint64_t msize = group.module_size();
    for (std::uint64_t yi = 0; yi < msize; ++yi)
        for (std::uint64_t xi = 0; xi < msize; ++xi) {
            GroupElement g = group.identity_element();
            g.x = tuple_of_index(ring, n, xi);
            g.y = tuple_of_index(ring, n, yi);
            gens.entries.push_back({1, rep.matrix(g),
                                    "M:" + std::to_string(yi) + " T:" + std::to_string(xi)});
        }
    return gens;
}

Filtration induced_filtration(const Representation& rep, const GradedGeneratorSet& gens,
                              FiltrationMode mode,
                              std::optional<std::vector<CycloNum>> cyclic_vector) {
    const std::size_t dim = rep.dimension();
    const CycloField& field = rep.field();
    if (mode == FiltrationMode::cyclic && !cyclic_vector)
        throw std::invalid_argument("cyclic mode requires a cyclic vector");

    Filtration filt;
    filt.mode = mode;
    filt.dim_ambient = dim;
    const std::size_t top = gens.max_degree();
    for (std::size_t k = 0; k <= top; ++k) {
        auto ops = gens.level(k);
        std::size_t row_count = ops.size() * (mode == FiltrationMode::full_module ? dim : 1);
        CycloMatrix rows(field, row_count, dim);
        std::size_t r = 0;
        for (const auto* op : ops) {
            if (mode == FiltrationMode::full_module) {
                // Column span of op: its columns as rows.
                for (std::size_t c = 0; c < dim; ++c, ++r)
                    for (std::size_t i = 0; i < dim; ++i) rows.set(r, i, op->at(i, c));
            } else {
                for (std::size_t i = 0; i < dim; ++i) {
                    CycloNum acc = field.zero();
                    for (std::size_t j = 0; j < dim; ++j)
                        acc = acc + op->at(i, j) * (*cyclic_vector)[j];
                    rows.set(r, i, acc);
                }
                ++r;
            }
        }
        filt.spaces.push_back(row_space_basis(rows));
    }
    return filt;
}

FiltrationCertificate verify_filtration_theorem(const Filtration& filt,
                                                const GradedGeneratorSet& gens,
                                                const CycloMatrix* morphism,
                                                const Filtration* target_filtration) {
    FiltrationCertificate cert;
    const std::size_t top = filt.spaces.size() - 1;

    for (std::size_t k = 0; k + 1 <= top; ++k)
        if (!subspace_contains(filt.spaces[k + 1], filt.spaces[k])) {
            cert.nesting = false;
            if (cert.witness.empty())
                cert.witness = "F_" + std::to_string(k) + " not contained in F_" +
                               std::to_string(k + 1);
        }

    for (const auto& entry : gens.entries) {
        CycloMatrix op_t = entry.matrix.transpose();
        for (std::size_t l = 0; l <= top; ++l) {
            std::size_t target = std::min(entry.degree + l, top);
            CycloMatrix image = filt.spaces[l] * op_t;  // rows: T applied to each basis vector
            if (!subspace_contains(filt.spaces[target], image)) {
                cert.degree_additive = false;
                if (cert.witness.empty())
                    cert.witness = "operator '" + entry.name + "' (degree " +
                                   std::to_string(entry.degree) + ") maps F_" + std::to_string(l) +
                                   " outside F_" + std::to_string(target);
            }
        }
    }

    if (morphism && target_filtration) {
        CycloMatrix f_t = morphism->transpose();
        for (std::size_t k = 0; k <= top && k < target_filtration->spaces.size(); ++k) {
            CycloMatrix image = filt.spaces[k] * f_t;
            if (!subspace_contains(target_filtration->spaces[k], image)) {
                cert.morphism_compatible = false;
                if (cert.witness.empty())
                    cert.witness = "morphism maps F_" + std::to_string(k) + " outside F'_" +
                                   std::to_string(k);
            }
        }
    }
    return cert;
}

namespace {

/// Rows of `space` that extend `smaller` to a basis of `space`, chosen greedily
/// in row order (deterministic echelon-complement representatives).
CycloMatrix coset_representatives(const CycloField& field, const CycloMatrix& space,
                                  const CycloMatrix* smaller) {
    CycloMatrix chosen(field, 0, space.cols());
    if (smaller) chosen = *smaller;
    CycloMatrix reps(field, space.rows(), space.cols());
    std::size_t count = 0;
    for (std::size_t r = 0; r < space.rows(); ++r) {
        CycloMatrix row(field, 1, space.cols());
        for (std::size_t c = 0; c < space.cols(); ++c) row.set(0, c, space.at(r, c));
        CycloMatrix candidate = stack_rows(chosen, row);
        if (rank(candidate) > chosen.rows()) {
            for (std::size_t c = 0; c < space.cols(); ++c) reps.set(count, c, space.at(r, c));
            ++count;
            chosen = row_space_basis(candidate);
        }
    }
    CycloMatrix out(field, count, space.cols());
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < space.cols(); ++c) out.set(r, c, reps.at(r, c));
    return out;
}

}  // namespace

std::vector<GradedPiece> graded_pieces(const Filtration& filt) {
    std::vector<GradedPiece> out;
    if (filt.spaces.empty()) return out;
    const CycloField& field = filt.spaces[0].field();
    for (std::size_t k = 0; k < filt.spaces.size(); ++k) {
        const CycloMatrix* smaller = k == 0 ? nullptr : &filt.spaces[k - 1];
        CycloMatrix reps = coset_representatives(field, filt.spaces[k], smaller);
        out.push_back(GradedPiece{k, reps.rows(), std::move(reps)});
    }
    return out;
}

GradedMorphismReport gr_of_morphism(const CycloMatrix& f, const Filtration& source,
                                    const Filtration& target) {
    GradedMorphismReport report;
    if (source.spaces.size() != target.spaces.size()) return report;
    const CycloField& field = f.field();
    CycloMatrix f_t = f.transpose();

    report.compatible = true;
    for (std::size_t k = 0; k < source.spaces.size(); ++k)
        if (!subspace_contains(target.spaces[k], source.spaces[k] * f_t)) {
            report.compatible = false;
            return report;
        }

    auto src_pieces = graded_pieces(source);
    auto tgt_pieces = graded_pieces(target);
    report.all_invertible = true;
    for (std::size_t k = 0; k < src_pieces.size(); ++k) {
        const CycloMatrix& src_reps = src_pieces[k].representatives;
        const CycloMatrix& tgt_reps = tgt_pieces[k].representatives;
        // Express f(rep_i) over [gr representatives; F'_{k-1} basis]; the gr
        // coordinates give the induced map.
        CycloMatrix lower =
            k == 0 ? CycloMatrix(field, 0, f.cols()) : target.spaces[k - 1];
        CycloMatrix solve_basis = stack_rows(tgt_reps, lower).transpose();
        CycloMatrix gr_map(field, tgt_reps.rows(), src_reps.rows());
        bool well_defined = true;
        for (std::size_t i = 0; i < src_reps.rows() && well_defined; ++i) {
            std::vector<CycloNum> image(f.rows(), field.zero());
            for (std::size_t r = 0; r < f.rows(); ++r) {
                CycloNum acc = field.zero();
                for (std::size_t c = 0; c < f.cols(); ++c)
                    acc = acc + f.at(r, c) * src_reps.at(i, c);
                image[r] = acc;
            }
            auto coords = solve(solve_basis, image);
            if (!coords) {
                well_defined = false;
                break;
            }
            for (std::size_t j = 0; j < tgt_reps.rows(); ++j) gr_map.set(j, i, (*coords)[j]);
        }
        bool inv = well_defined && src_reps.rows() == tgt_reps.rows() &&
                   (src_reps.rows() == 0 || rank(gr_map) == src_reps.rows());
        report.invertible.push_back(inv);
        report.all_invertible = report.all_invertible && inv;
        report.maps.push_back(std::move(gr_map));
    }
    return report;
}

BoundaryDecompositionReport boundary_decomposition_check(const Representation& rep,
                                                         const Filtration& filt, std::size_t k) {
    BoundaryDecompositionReport report;
    report.level = k;
    if (k >= filt.spaces.size()) {
        report.note = "level beyond the filtration top";
        return report;
    }
    const CycloMatrix& fk = filt.spaces[k];
    DecompositionBlocks blocks = decompose_representation(rep);
    report.exhausted = blocks.complete;
    for (const auto& b : blocks.blocks) report.block_dimensions.push_back(b.rows());
    if (blocks.blocks.size() > 16) {
        report.exhausted = false;
        report.note = "too many blocks for subset enumeration";
        return report;
    }
    if (fk.rows() == 0) {
        report.note = "zero filtration level; vacuous";
        return report;
    }

    const CycloField& field = rep.field();
    const std::size_t nblocks = blocks.blocks.size();
    for (std::uint64_t mask = 1; mask + 1 < (1ull << nblocks); ++mask) {
        // Image candidate: blocks in the mask; kernel: the rest.
        bool image_ok = true;
        std::size_t ker_dim = 0;
        CycloMatrix ker_rows(field, 0, rep.dimension());
        for (std::size_t i = 0; i < nblocks; ++i) {
            if (mask & (1ull << i)) {
                if (!subspace_contains(fk, blocks.blocks[i])) {
                    image_ok = false;
                    break;
                }
            } else {
                ker_rows = stack_rows(ker_rows, blocks.blocks[i]);
                ker_dim += blocks.blocks[i].rows();
            }
        }
        if (!image_ok) continue;
        // M^{>k} n F_k = 0 <=> dims add up.
        if (rank(stack_rows(fk, ker_rows)) != fk.rows() + ker_dim) continue;

        if (blocks.complete) {
            // Witness projection onto the mask blocks along the others.
            CycloMatrix q(field, rep.dimension(), rep.dimension());
            std::size_t col = 0;
            std::vector<bool> selected;
            for (std::size_t i = 0; i < nblocks; ++i)
                for (std::size_t r = 0; r < blocks.blocks[i].rows(); ++r, ++col) {
                    for (std::size_t c = 0; c < rep.dimension(); ++c)
                        q.set(c, col, blocks.blocks[i].at(r, c));
                    selected.push_back(mask & (1ull << i));
                }
            CycloMatrix d(field, rep.dimension(), rep.dimension());
            for (std::size_t i = 0; i < selected.size(); ++i)
                if (selected[i]) d.set(i, i, field.one());
            report.witness_projection = q * d * inverse(q);
        }
        report.found = true;
        return report;
    }
    report.note = report.exhausted ? "block-idempotent search space exhausted"
                                   : "incomplete block decomposition; search not exhaustive";
    return report;
}

}  // namespace heisenrig
