#include "test_common.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace heisenrig;

namespace {

PhaseFunction phase_on(const FiniteRing& ring, std::vector<std::uint64_t> table) {
    return PhaseFunction(AdditiveDomain::ring_power(ring, 1), ring, std::move(table));
}

PhaseFunction square_phase(const FiniteRing& ring) {
    std::vector<std::uint64_t> table(ring.size());
    for (std::uint64_t u = 0; u < ring.size(); ++u) table[u] = ring.mul(u, u);
    return phase_on(ring, std::move(table));
}

}  // namespace

TEST_CASE("first differences") {
    FiniteRing z4 = testutil::ring("Z/4");
    std::vector<std::uint64_t> id_table{0, 1, 2, 3};
    PhaseFunction phi = phase_on(z4, id_table);
    PhaseFunction d1 = difference(phi, 1);
    CHECK(d1.table == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(difference(phi, 0).is_zero());

    FiniteRing z3 = testutil::ring("Z/3");
    PhaseFunction sq = square_phase(z3);
    // (u+1)^2 - u^2 = 2u + 1 mod 3.
    CHECK(difference(sq, 1).table == std::vector<std::uint64_t>{1, 0, 2});
}

TEST_CASE("iterated differences") {
    FiniteRing z3 = testutil::ring("Z/3");
    PhaseFunction sq = square_phase(z3);
    PhaseFunction d2 = iterated_difference(sq, {1, 1});
    // Expansion (u+2)^2 - 2(u+1)^2 + u^2 = 2 = 2 h1 h2.
    CHECK(d2.table == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(iterated_difference(sq, {}).table == sq.table);

    FiniteRing z4 = testutil::ring("Z/4");
    Pairing beta = Pairing::identity(z4, 1);
    for (std::uint64_t b = 0; b < 4; ++b) {
        PhaseFunction phi_b = linear_phase(beta, {b});
        for (std::uint64_t h1 = 0; h1 < 4; ++h1)
            for (std::uint64_t h2 = 0; h2 < 4; ++h2)
                CHECK(iterated_difference(phi_b, {h1, h2}).is_zero());
    }
}

TEST_CASE("iterated differences are symmetric in the directions") {
    std::mt19937_64 rng(99);
    FiniteRing z4 = testutil::ring("Z/4");
    std::uniform_int_distribution<std::uint64_t> pick(0, 3);
    for (int it = 0; it < 50; ++it) {
        std::vector<std::uint64_t> table(4);
        for (auto& v : table) v = pick(rng);
        PhaseFunction phi = phase_on(z4, table);
        std::vector<std::uint64_t> hs{pick(rng), pick(rng), pick(rng)};
        std::vector<std::uint64_t> perm = hs;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(iterated_difference(phi, hs).table == iterated_difference(phi, perm).table);
    }
}

TEST_CASE("additive degree") {
    FiniteRing z3 = testutil::ring("Z/3");
    CHECK(additive_degree(phase_on(z3, {2, 2, 2})) == 0);  // constant
    CHECK(additive_degree(square_phase(z3)) == 2);
    FiniteRing z4 = testutil::ring("Z/4");
    CHECK(additive_degree(square_phase(z4)) == 2);

    for (const auto& text : testutil::frobenius_corpus()) {
        FiniteRing r = testutil::ring(text);
        Pairing beta = Pairing::identity(r, 1);
        for (std::uint64_t b = 0; b < r.size(); ++b) {
            CAPTURE(text);
            CHECK(additive_degree(linear_phase(beta, {b})) <= 1);
        }
    }
    // Nonzero b against the identity pairing reaches degree exactly 1.
    CHECK(additive_degree(linear_phase(Pairing::identity(z4, 1), {1})) == 1);

    // Finite termination on arbitrary tables. Over a prime field the degree
    // stays below |A| ((T-1)^p = T^p - 1 kills everything); over Z/4 the
    // augmentation ideal is nilpotent of index 6, so 5 is attainable and the
    // cap must be wider than |A|.
    std::mt19937_64 rng(1234);
    for (const char* spec : {"Z/2", "Z/3", "Z/5"}) {
        FiniteRing rp = testutil::ring(spec);
        std::uniform_int_distribution<std::uint64_t> pick(0, rp.size() - 1);
        for (int it = 0; it < 20; ++it) {
            std::vector<std::uint64_t> table(rp.size());
            for (auto& v : table) v = pick(rng);
            CHECK(additive_degree(phase_on(rp, table)) < rp.size());
        }
    }
    std::uniform_int_distribution<std::uint64_t> pick4(0, 3);
    std::size_t max_seen = 0;
    for (int it = 0; it < 30; ++it) {
        std::vector<std::uint64_t> table(4);
        for (auto& v : table) v = pick4(rng);
        max_seen = std::max(max_seen, additive_degree(phase_on(z4, table), 8));
    }
    CHECK(max_seen <= 5);
    CHECK_THROWS_AS(additive_degree(square_phase(z4), 1), std::domain_error);
}

TEST_CASE("defect invariants") {
    FiniteRing z4 = testutil::ring("Z/4");
    DefectReport lin = defect_invariants(phase_on(z4, {0, 1, 2, 3}));
    CHECK(lin.degree == 1);
    CHECK(lin.literal_min == 1);
    CHECK(lin.additive);
    CHECK(lin.tensor_index == 1);
    CHECK(lin.tensor_values == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(lin.additive_convention_flag);  // written convention says 0, literal values differ

    DefectReport con = defect_invariants(phase_on(z4, {3, 3, 3, 3}));
    CHECK(con.degree == 0);
    CHECK(con.literal_min == 0);
    CHECK(con.constant);
    CHECK(con.tensor_values == std::vector<std::uint64_t>{0});
    CHECK(con.additive_convention_flag);

    FiniteRing z3 = testutil::ring("Z/3");
    DefectReport sq = defect_invariants(square_phase(z3));
    CHECK(sq.degree == 2);
    CHECK(sq.literal_min == 1);
    CHECK(sq.tensor_index == 2);
    CHECK(sq.tensor_values == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("phase operators") {
    FiniteRing z4 = testutil::ring("Z/4");
    AdditiveCharacter eps = all_characters(z4)[1];  // eps(1) = i
    CycloField q4 = CycloField::make(4);

    PhaseFunction zero = phase_on(z4, {0, 0, 0, 0});
    CHECK(phase_operator(zero, eps) == CycloMatrix::identity(q4, 4));

    PhaseFunction id = phase_on(z4, {0, 1, 2, 3});
    CycloMatrix m = phase_operator(id, eps);
    for (std::uint64_t u = 0; u < 4; ++u)
        CHECK(m.at(u, u) == q4.root_of_unity(static_cast<std::int64_t>(u)));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> pick(0, 3);
    for (int it = 0; it < 10; ++it) {
        std::vector<std::uint64_t> ta(4), tb(4), tsum(4);
        for (std::size_t u = 0; u < 4; ++u) {
            ta[u] = pick(rng);
            tb[u] = pick(rng);
            tsum[u] = z4.add(ta[u], tb[u]);
        }
        CHECK(phase_operator(phase_on(z4, ta), eps) * phase_operator(phase_on(z4, tb), eps) ==
              phase_operator(phase_on(z4, tsum), eps));
    }
}

TEST_CASE("pullback") {
    FiniteRing z4 = testutil::ring("Z/4");
    AdditiveDomain d4 = AdditiveDomain::ring_power(z4, 1);
    PhaseFunction sq = square_phase(z4);

    CHECK(pullback(sq, AdditiveMap::identity(d4)).table == sq.table);

    AdditiveDomain d2({2});
    AdditiveMap doubling(d2, d4, {0, 2});  // x -> 2x from Z/2 into Z/4
    CHECK(doubling.is_additive());
    CHECK(pullback(sq, doubling).table == std::vector<std::uint64_t>{0, 0});

    AdditiveMap zero_map(d4, d4, {0, 0, 0, 0});
    CHECK(pullback(sq, zero_map).is_constant());

    AdditiveMap not_additive(d4, d4, {0, 1, 1, 1});
    CHECK_THROWS_AS(pullback(sq, not_additive), std::invalid_argument);
}

TEST_CASE("pullback functor laws") {
    FiniteRing z4 = testutil::ring("Z/4");
    AdditiveDomain d4 = AdditiveDomain::ring_power(z4, 1);
    // Ring-scalar maps are additive; (g o f)* = f* g*.
    auto scalar_map = [&](std::uint64_t c) {
        std::vector<std::uint64_t> t(4);
        for (std::uint64_t x = 0; x < 4; ++x) t[x] = z4.mul(c, x);
        return AdditiveMap(d4, d4, std::move(t));
    };
    AdditiveMap f = scalar_map(2), g = scalar_map(3);
    std::vector<std::uint64_t> comp(4);
    for (std::uint64_t x = 0; x < 4; ++x) comp[x] = g.table[f.table[x]];
    AdditiveMap gf(d4, d4, std::move(comp));
    PhaseFunction sq = square_phase(z4);
    CHECK(pullback(sq, gf).table == pullback(pullback(sq, g), f).table);
}

TEST_CASE("admissible phase datum validation") {
    FiniteRing z4 = testutil::ring("Z/4");
    AdditiveCharacter eps = all_characters(z4)[1];
    Pairing beta = Pairing::identity(z4, 1);
    AdditiveDomain d4 = AdditiveDomain::ring_power(z4, 1);

    PhaseFamily family = linear_phase_family(beta);
    // Ring-scalar morphisms keep the linear family stable.
    std::vector<AdditiveMap> morphisms;
    for (std::uint64_t c : {0ull, 1ull, 2ull, 3ull}) {
        std::vector<std::uint64_t> t(4);
        for (std::uint64_t x = 0; x < 4; ++x) t[x] = z4.mul(c, x);
        morphisms.emplace_back(d4, d4, std::move(t));
    }
    AdmissibleDatumReport report = validate_admissible_datum(family, morphisms, eps);
    CHECK(report.all_passed());
    CHECK(report.witnessed_degree == 1);

    // Family missing phi_0 fails interaction closure.
    std::vector<PhaseFunction> partial;
    for (std::uint64_t b = 1; b < 4; ++b) partial.push_back(linear_phase(beta, {b}));
    PhaseFamily broken(d4, std::move(partial), InteractionLaw::composition);
    AdmissibleDatumReport broken_report = validate_admissible_datum(broken, {}, eps);
    CHECK_FALSE(broken_report.interaction_closed.passed);

    // Declared bound 1 fails for the square phase on Z/3.
    FiniteRing z3 = testutil::ring("Z/3");
    AdditiveDomain d3 = AdditiveDomain::ring_power(z3, 1);
    std::vector<std::uint64_t> sq{0, 1, 1};
    PhaseFamily squares(d3, {PhaseFunction(d3, z3, sq)}, InteractionLaw::composition);
    AdditiveCharacter eps3 = all_characters(z3)[1];
    AdmissibleDatumReport sq_report = validate_admissible_datum(squares, {}, eps3, 1);
    CHECK_FALSE(sq_report.bounded_degree.passed);
    CHECK(sq_report.witnessed_degree == 2);
}
