#include "test_common.hpp"

#include "heisenrig/filtration.hpp"

#include <doctest.h>

using namespace heisenrig;

namespace {

std::vector<CycloNum> delta0(const Representation& rep) {
    std::vector<CycloNum> v(rep.dimension(), rep.field().zero());
    v[0] = rep.field().one();
    return v;
}

}  // namespace

TEST_CASE("FH cyclic filtration on Z/2") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    GradedGeneratorSet gens = fh_graded_set(pi);
    Filtration filt = induced_filtration(pi, gens, FiltrationMode::cyclic, delta0(pi));

    REQUIRE(filt.spaces.size() == 2);
    CHECK(filt.spaces[0].rows() == 1);
    CHECK(filt.spaces[1].rows() == 2);

    FiltrationCertificate cert = verify_filtration_theorem(filt, gens);
    CHECK(cert.nesting);
    CHECK(cert.degree_additive);

    auto pieces = graded_pieces(filt);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].dimension == 1);
    CHECK(pieces[1].dimension == 1);
}

TEST_CASE("full-module mode with the identity at degree zero is degenerate") {
    HeisenbergGroup g = testutil::standard_group("Z/4");
    Representation pi = schrodinger_representation(g);
    GradedGeneratorSet gens = fh_graded_set(pi);
    Filtration filt = induced_filtration(pi, gens, FiltrationMode::full_module);
    CHECK(filt.spaces[0].rows() == 4);  // F_0 = M
    auto pieces = graded_pieces(filt);
    CHECK(pieces[0].dimension == 4);
    for (std::size_t k = 1; k < pieces.size(); ++k) CHECK(pieces[k].dimension == 0);
}

TEST_CASE("zero operators give the zero filtration") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    GradedGeneratorSet gens;
    gens.entries.push_back({0, CycloMatrix(pi.field(), 2, 2), "zero"});
    gens.entries.push_back({1, CycloMatrix(pi.field(), 2, 2), "zero"});
    Filtration filt = induced_filtration(pi, gens, FiltrationMode::full_module);
    CHECK(filt.spaces[0].rows() == 0);
    CHECK(filt.spaces[1].rows() == 0);
}

TEST_CASE("cyclic mode requires a vector") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    GradedGeneratorSet gens = fh_graded_set(pi);
    CHECK_THROWS_AS(induced_filtration(pi, gens, FiltrationMode::cyclic), std::invalid_argument);
}

TEST_CASE("filtrations grow monotonically with the operator set") {
    HeisenbergGroup g = testutil::standard_group("Z/4");
    Representation pi = schrodinger_representation(g);
    GradedGeneratorSet small;
    small.entries.push_back({0, CycloMatrix::identity(pi.field(), 4), "scalar"});
    small.entries.push_back({1, pi.matrix(testutil::elem(g, 1, 0, 0)), "T:1"});
    GradedGeneratorSet large = small;
    large.entries.push_back({1, pi.matrix(testutil::elem(g, 0, 1, 0)), "M:1"});

    Filtration fs = induced_filtration(pi, small, FiltrationMode::cyclic, delta0(pi));
    Filtration fl = induced_filtration(pi, large, FiltrationMode::cyclic, delta0(pi));
    for (std::size_t k = 0; k < fs.spaces.size(); ++k) {
        CHECK(fs.spaces[k].rows() <= fl.spaces[k].rows());
        CHECK(subspace_contains(fl.spaces[k], fs.spaces[k]));
    }
}

TEST_CASE("morphism compatibility certificates") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    GradedGeneratorSet gens = fh_graded_set(pi);
    Filtration filt = induced_filtration(pi, gens, FiltrationMode::cyclic, delta0(pi));

    CycloMatrix id = CycloMatrix::identity(pi.field(), 2);
    FiltrationCertificate ok = verify_filtration_theorem(filt, gens, &id, &filt);
    CHECK(ok.morphism_compatible);

    // The swap sends F_0 = <delta_0> onto <delta_1>, violating compatibility.
    CycloMatrix swap(pi.field(), 2, 2);
    swap.set(0, 1, pi.field().one());
    swap.set(1, 0, pi.field().one());
    FiltrationCertificate bad = verify_filtration_theorem(filt, gens, &swap, &filt);
    CHECK_FALSE(bad.morphism_compatible);
    CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("graded maps of the induced iso are invertible at every level") {
    for (const char* text : {"Z/2", "Z/4"}) {
        HeisenbergGroup g = testutil::standard_group(text);
        Representation pi = schrodinger_representation(g);
        Representation ind = induced_representation(g);
        InducedIso iso = induced_iso(g);

        // Matching cyclic filtrations: e_0 on the induced side maps to delta_0.
        Filtration fi = induced_filtration(ind, fh_graded_set(ind), FiltrationMode::cyclic,
                                           delta0(ind));
        Filtration fp = induced_filtration(pi, fh_graded_set(pi), FiltrationMode::cyclic,
                                           delta0(pi));
        GradedMorphismReport rep = gr_of_morphism(iso.intertwiner, fi, fp);
        CAPTURE(text);
        CHECK(rep.compatible);
        CHECK(rep.all_invertible);

        GradedMorphismReport idrep =
            gr_of_morphism(CycloMatrix::identity(pi.field(), pi.dimension()), fp, fp);
        CHECK(idrep.compatible);
        for (const auto& m : idrep.maps)
            CHECK(m == CycloMatrix::identity(pi.field(), m.rows()));
    }
}

TEST_CASE("a rank-deficient compatible map has a singular graded map") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    Filtration filt =
        induced_filtration(pi, fh_graded_set(pi), FiltrationMode::cyclic, delta0(pi));
    // Projection onto delta_0: fixes F_0, collapses gr_1.
    CycloMatrix proj(pi.field(), 2, 2);
    proj.set(0, 0, pi.field().one());
    GradedMorphismReport rep = gr_of_morphism(proj, filt, filt);
    CHECK(rep.compatible);
    REQUIRE(rep.invertible.size() == 2);
    CHECK(rep.invertible[0]);
    CHECK_FALSE(rep.invertible[1]);
    CHECK_FALSE(rep.all_invertible);
}

TEST_CASE("graded maps compose functorially") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    Filtration filt =
        induced_filtration(pi, fh_graded_set(pi), FiltrationMode::cyclic, delta0(pi));
    CycloMatrix a(pi.field(), 2, 2);  // diagonal, filtration-compatible
    a.set(0, 0, pi.field().one());
    a.set(1, 1, pi.field().root_of_unity(1));
    CycloMatrix b(pi.field(), 2, 2);
    b.set(0, 0, pi.field().root_of_unity(1));
    b.set(1, 1, pi.field().one());
    GradedMorphismReport ra = gr_of_morphism(a, filt, filt);
    GradedMorphismReport rb = gr_of_morphism(b, filt, filt);
    GradedMorphismReport rba = gr_of_morphism(b * a, filt, filt);
    REQUIRE(ra.compatible);
    REQUIRE(rb.compatible);
    REQUIRE(rba.compatible);
    for (std::size_t k = 0; k < rba.maps.size(); ++k)
        CHECK(rba.maps[k] == rb.maps[k] * ra.maps[k]);
}

TEST_CASE("boundary decomposition: indecomposable vs split") {
    HeisenbergGroup g = testutil::standard_group("Z/2");
    Representation pi = schrodinger_representation(g);
    Filtration filt =
        induced_filtration(pi, fh_graded_set(pi), FiltrationMode::cyclic, delta0(pi));
    BoundaryDecompositionReport none = boundary_decomposition_check(pi, filt, 0);
    CHECK_FALSE(none.found);
    CHECK(none.exhausted);

    // pi + pi with F_0 supported in the first summand.
    Representation sum = direct_sum(pi, pi);
    Filtration split;
    split.mode = FiltrationMode::cyclic;
    split.dim_ambient = 4;
    CycloMatrix f0(sum.field(), 2, 4);
    f0.set(0, 0, sum.field().one());
    f0.set(1, 1, sum.field().one());
    split.spaces.push_back(row_space_basis(f0));
    split.spaces.push_back(row_space_basis(CycloMatrix::identity(sum.field(), 4)));
    BoundaryDecompositionReport found = boundary_decomposition_check(sum, split, 0);
    CHECK(found.found);
    REQUIRE(found.witness_projection.has_value());
    const CycloMatrix& p = *found.witness_projection;
    CHECK(p * p == p);
    for (const auto& gen : sum.generator_matrices()) CHECK(p * gen == gen * p);

    // Zero filtration level: vacuous.
    Filtration zero;
    zero.mode = FiltrationMode::cyclic;
    zero.dim_ambient = 2;
    zero.spaces.push_back(CycloMatrix(pi.field(), 0, 2));
    zero.spaces.push_back(row_space_basis(CycloMatrix::identity(pi.field(), 2)));
    BoundaryDecompositionReport vac = boundary_decomposition_check(pi, zero, 0);
    CHECK_FALSE(vac.found);
}

TEST_CASE("strata dimensions always sum to the top dimension") {
    for (const char* text : {"Z/2", "Z/4", "F2[t]/(t^2)"}) {
        HeisenbergGroup g = testutil::standard_group(text);
        Representation pi = schrodinger_representation(g);
        Filtration filt =
            induced_filtration(pi, fh_graded_set(pi), FiltrationMode::cyclic, delta0(pi));
        std::size_t total = 0;
        for (const auto& piece : graded_pieces(filt)) total += piece.dimension;
        CAPTURE(text);
        CHECK(total == filt.spaces.back().rows());
    }
}
