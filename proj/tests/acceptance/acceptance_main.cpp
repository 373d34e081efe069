// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// --cli <path> points at the command-line binary (used by the determinism
// criterion).

#include "heisenrig/defect.hpp"
#include "heisenrig/filtration.hpp"
#include "heisenrig/homspace.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace heisenrig;

namespace {

std::string g_cli_path;
int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note
              << "\n";
    if (!ok) ++g_failures;
}

struct Instance {
    std::string spec;
    std::size_t n;
};

const std::vector<Instance>& corpus() {
    static const std::vector<Instance> list = {
        {"Z/4", 1}, {"Z/6", 1}, {"F2[t]/(t^2+t+1)", 1}, {"F2[t]/(t^2)", 1}, {"Z/2 x Z/3", 1},
        {"Z/2", 2},
    };
    return list;
}

const char* kTableRing =
    "table{p=2;rank=3;mul=[1,0,0],[0,1,0],[0,0,1];"
    "[0,1,0],[0,0,0],[0,0,0];"
    "[0,0,1],[0,0,0],[0,0,0]}";

HeisenbergGroup make_group(const Instance& inst) {
    FiniteRing ring = FiniteRing::build(inst.spec);
    auto cert = certify_frobenius(ring);
    if (!cert.frobenius) throw std::runtime_error("corpus ring is not Frobenius");
    return HeisenbergGroup(ring, inst.n, Pairing::identity(ring, inst.n), *cert.generating);
}

bool criterion_frobenius() {
    bool ok = true;
    for (const char* spec : {"Z/4", "Z/6", "F2[t]/(t^2+t+1)", "F2[t]/(t^2)", "Z/2 x Z/3"}) {
        FiniteRing ring = FiniteRing::build(spec);
        auto cert = certify_frobenius(ring);
        ok = ok && cert.frobenius && cert.generating.has_value() &&
             is_generating(*cert.generating);
    }
    FiniteRing t8 = FiniteRing::build(kTableRing);
    auto cert = certify_frobenius(t8);
    ok = ok && !cert.frobenius && cert.witnesses.size() == 8;
    auto chars = all_characters(t8);
    ok = ok && chars.size() == 8;
    for (std::size_t i = 0; i < cert.witnesses.size() && ok; ++i) {
        std::uint64_t w = cert.witnesses[i];
        ok = ok && w != 0;
        for (std::uint64_t s = 0; s < t8.size(); ++s)
            ok = ok && chars[i].exponent_of(t8.mul(w, s)) == 0;
    }
    return ok;
}

bool criterion_weyl() {
    bool ok = true;
    for (const auto& inst : corpus()) {
        HeisenbergGroup g = make_group(inst);
        if (g.module_size() > 16) continue;
        WeylCertificate cert = verify_weyl(g, 16);
        ok = ok && cert.holds && cert.exhaustive &&
             cert.pairs_checked == g.module_size() * g.module_size();
    }
    return ok;
}

bool criterion_homomorphism() {
    bool ok = true;
    for (const auto& inst : corpus()) {
        HeisenbergGroup g = make_group(inst);
        if (g.order() > 4096) continue;
        Representation pi = schrodinger_representation(g);
        HomomorphismCertificate cert = verify_homomorphism(pi, 4096);
        ok = ok && cert.holds && cert.exhaustive &&
             cert.pairs_checked == g.order() * g.order();
    }
    return ok;
}

bool criterion_centre() {
    struct Case {
        std::string spec;
        std::vector<std::uint64_t> pairing;
    };
    FiniteRing z4 = FiniteRing::build("Z/4");
    std::vector<std::pair<HeisenbergGroup, bool>> cases;
    for (const char* spec : {"Z/4", "Z/6", "F2[t]/(t^2+t+1)", "F2[t]/(t^2)", "Z/2 x Z/3"}) {
        HeisenbergGroup g = make_group({spec, 1});
        cases.emplace_back(g, true);
    }
    AdditiveCharacter eps = *certify_frobenius(z4).generating;
    cases.emplace_back(HeisenbergGroup(z4, 1, Pairing::zero(z4, 1), eps), false);
    cases.emplace_back(HeisenbergGroup(z4, 1, Pairing(z4, 1, {2}), eps), false);

    bool ok = cases.size() >= 6;
    for (const auto& [group, expect_nondeg] : cases) {
        bool nondeg = is_nondegenerate(group.pairing(), group.character());
        ok = ok && nondeg == expect_nondeg;
        bool mu_only = centre_is_mu_R(centre(group));
        ok = ok && mu_only == nondeg;
        if (nondeg) ok = ok && centre(group).size() == group.central_order();
    }
    return ok;
}

bool criterion_schur() {
    bool ok = true;
    for (const char* spec : {"Z/4", "Z/6", "F2[t]/(t^2+t+1)", "F2[t]/(t^2)", "Z/2 x Z/3"}) {
        HeisenbergGroup g = make_group({spec, 1});
        Representation pi = schrodinger_representation(g);
        std::size_t end_dim = hom_space(pi, pi).dimension();
        Rational ip = character_inner_product(pi, pi);
        ok = ok && end_dim == 1 && ip == Rational(1);
    }
    return ok;
}

bool criterion_induced() {
    bool ok = true;
    for (const char* spec : {"Z/4", "Z/6", "F2[t]/(t^2+t+1)", "F2[t]/(t^2)", "Z/2 x Z/3"}) {
        HeisenbergGroup g = make_group({spec, 1});
        InducedIso iso = induced_iso(g);
        ok = ok && iso.equivariant && iso.bijective && det_nonzero(iso.intertwiner);
        Representation pi = schrodinger_representation(g);
        Representation ind = induced_representation(g);
        for (std::uint64_t i = 0; i < g.order() && ok; ++i) {
            GroupElement e = g.element_of_index(i);
            ok = pi.matrix(e).trace() == ind.matrix(e).trace();
        }
    }
    return ok;
}

bool criterion_svn() {
    bool ok = true;
    for (const char* spec : {"Z/4", "F2[t]/(t^2)"}) {
        FiniteRing ring = FiniteRing::build(spec);
        SvnReport report = stone_von_neumann_verify(ring);
        ok = ok && report.frobenius && report.nondegenerate && report.pass;
        ok = ok && report.models.size() == 4 && report.pairs.size() == 6;
        for (const auto& model : report.models)
            ok = ok && model.central_scalar && model.central_identity && model.indecomposable;
        bool recovered = false;
        for (const auto& pair : report.pairs) {
            ok = ok && pair.hom_dimension == 1 && pair.witness_invertible;
            if (pair.conjugator_recovered) recovered = *pair.conjugator_recovered;
        }
        ok = ok && recovered;
    }
    return ok;
}

bool criterion_sharpness() {
    FiniteRing t8 = FiniteRing::build(kTableRing);
    std::size_t best = 0;
    for (const auto& chi : all_characters(t8))
        for (std::uint64_t b = 0; b < t8.size(); ++b)
            best = std::max(best, character_orbit(Pairing(t8, 1, {b}), chi).orbit_size);
    bool ok = best < 8;

    for (const auto& inst : corpus()) {
        HeisenbergGroup g = make_group(inst);
        OrbitReport orbit = character_orbit(g.pairing(), g.character());
        ok = ok && is_nondegenerate(g.pairing(), g.character()) && orbit.full &&
             orbit.orbit_size == g.module_size();
    }
    return ok;
}

bool criterion_defect() {
    bool ok = true;
    for (const auto& inst : corpus()) {
        HeisenbergGroup g = make_group(inst);
        const std::uint64_t size = g.module_size();
        for (std::uint64_t b = 0; b < size; ++b) {
            PhaseFunction phi =
                linear_phase(g.pairing(), tuple_of_index(g.ring(), inst.n, b));
            ok = ok && additive_degree(phi) <= 1;
        }
    }
    for (const char* spec : {"Z/3", "Z/4"}) {
        FiniteRing ring = FiniteRing::build(spec);
        std::vector<std::uint64_t> squares(ring.size());
        for (std::uint64_t u = 0; u < ring.size(); ++u) squares[u] = ring.mul(u, u);
        PhaseFunction sq(AdditiveDomain::ring_power(ring, 1), ring, squares);
        ok = ok && additive_degree(sq) == 2;
    }

    // 500 random permutation-symmetry cases.
    std::mt19937_64 rng(2024);
    FiniteRing z4 = FiniteRing::build("Z/4");
    FiniteRing z6 = FiniteRing::build("Z/6");
    for (int it = 0; it < 500 && ok; ++it) {
        const FiniteRing& ring = it % 2 == 0 ? z4 : z6;
        AdditiveDomain dom = AdditiveDomain::ring_power(ring, 1);
        std::uniform_int_distribution<std::uint64_t> val(0, ring.size() - 1);
        std::vector<std::uint64_t> table(dom.size());
        for (auto& v : table) v = val(rng);
        PhaseFunction phi(dom, ring, table);
        std::uniform_int_distribution<std::size_t> len(1, 3);
        std::vector<std::uint64_t> hs(len(rng));
        for (auto& h : hs) h = val(rng);
        std::vector<std::uint64_t> perm = hs;
        std::shuffle(perm.begin(), perm.end(), rng);
        ok = iterated_difference(phi, hs).table == iterated_difference(phi, perm).table;
    }
    return ok;
}

bool criterion_filtration() {
    bool ok = true;
    for (const char* spec : {"Z/2", "Z/4"}) {
        HeisenbergGroup g = make_group({spec, 1});
        Representation pi = schrodinger_representation(g);
        Representation ind = induced_representation(g);
        std::vector<CycloNum> v(pi.dimension(), pi.field().zero());
        v[0] = pi.field().one();

        GradedGeneratorSet gens_pi = fh_graded_set(pi);
        Filtration filt_pi = induced_filtration(pi, gens_pi, FiltrationMode::cyclic, v);
        FiltrationCertificate cert = verify_filtration_theorem(filt_pi, gens_pi);
        ok = ok && cert.nesting && cert.degree_additive;

        std::size_t total = 0;
        for (const auto& piece : graded_pieces(filt_pi)) total += piece.dimension;
        ok = ok && total == pi.dimension();

        Filtration filt_ind =
            induced_filtration(ind, fh_graded_set(ind), FiltrationMode::cyclic, v);
        InducedIso iso = induced_iso(g);
        GradedMorphismReport gr = gr_of_morphism(iso.intertwiner, filt_ind, filt_pi);
        ok = ok && gr.compatible && gr.all_invertible;

        BoundaryDecompositionReport none = boundary_decomposition_check(pi, filt_pi, 0);
        ok = ok && !none.found && none.exhausted;

        Representation sum = direct_sum(pi, pi);
        Filtration split;
        split.mode = FiltrationMode::cyclic;
        split.dim_ambient = sum.dimension();
        CycloMatrix f0(sum.field(), pi.dimension(), sum.dimension());
        for (std::size_t i = 0; i < pi.dimension(); ++i) f0.set(i, i, sum.field().one());
        split.spaces.push_back(row_space_basis(f0));
        split.spaces.push_back(
            row_space_basis(CycloMatrix::identity(sum.field(), sum.dimension())));
        BoundaryDecompositionReport found = boundary_decomposition_check(sum, split, 0);
        ok = ok && found.found;
    }
    return ok;
}

std::string run_cli(const std::string& args) {
    std::string command = "'" + g_cli_path + "' " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("failed to launch the CLI");
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        output.append(buffer.data(), got);
    pclose(pipe);
    return output;
}

bool criterion_determinism() {
    if (g_cli_path.empty()) throw std::runtime_error("--cli path not supplied");
    std::vector<std::string> invocations = {
        "--ring Z/4 --format json --seed 12345 svn",
        "--ring Z/4 --format json orbit",
        "--ring Z/3 --format json defect --phase [0,1,1]",
        std::string("--ring '") + kTableRing + "' --format json frobenius",
        "--ring Z/2 --format json filtration",
        "--ring 'F2[t]/(t^2)' --format json --seed 7 svn",
    };
    bool ok = true;
    for (const auto& args : invocations) {
        std::string first = run_cli(args);
        std::string second = run_cli(args);
        ok = ok && !first.empty() && first == second;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

    criterion(1, "Frobenius certification of the corpus and the table-ring witness",
              criterion_frobenius);
    criterion(2, "Weyl relation holds bit-exactly on all pairs", criterion_weyl);
    criterion(3, "homomorphism property exhaustively over all pairs", criterion_homomorphism);
    criterion(4, "brute-force centre equals mu_R exactly under nondegeneracy", criterion_centre);
    criterion(5, "dim End(pi) = 1 by solver and by the exhaustive trace oracle", criterion_schur);
    criterion(6, "induced model is equivariantly isomorphic with matching traces",
              criterion_induced);
    criterion(7, "Stone-von-Neumann uniqueness across four models", criterion_svn);
    criterion(8, "character orbits fragment exactly outside the Frobenius class",
              criterion_sharpness);
    criterion(9, "defect calculus degrees and difference symmetry", criterion_defect);
    criterion(10, "filtration certificates, strata sums and boundary checks",
              criterion_filtration);
    criterion(11, "CLI reports are byte-identical under re-runs", criterion_determinism);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
