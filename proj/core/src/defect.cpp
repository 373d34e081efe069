#include "heisenrig/defect.hpp"

#include <algorithm>
#include <set>

namespace heisenrig {

AdditiveDomain::AdditiveDomain(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("additive domain needs at least one component");
    size_ = 1;
    for (std::uint64_t o : orders_) {
        if (o == 0) throw std::invalid_argument("component order must be positive");
        size_ *= o;
    }
}

AdditiveDomain AdditiveDomain::ring_power(const FiniteRing& ring, std::size_t n) {
    std::vector<std::uint64_t> orders;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& gen : ring.additive_basis()) orders.push_back(gen.order);
    return AdditiveDomain(std::move(orders));
}

std::uint64_t AdditiveDomain::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, mult = 1;
    for (std::uint64_t o : orders_) {
        out += mult * ((a % o + b % o) % o);
        a /= o;
        b /= o;
        mult *= o;
    }
    return out;
}

std::uint64_t AdditiveDomain::neg(std::uint64_t a) const {
    std::uint64_t out = 0, mult = 1;
    for (std::uint64_t o : orders_) {
        out += mult * ((o - a % o) % o);
        a /= o;
        mult *= o;
    }
    return out;
}

PhaseFunction::PhaseFunction(AdditiveDomain dom, FiniteRing cod, std::vector<std::uint64_t> values)
    : domain(std::move(dom)), codomain(std::move(cod)), table(std::move(values)) {
    if (table.size() != domain.size())
        throw std::invalid_argument("phase table length must equal the domain size");
    for (std::uint64_t v : table)
        if (v >= codomain.size()) throw std::invalid_argument("phase value out of range");
}

bool PhaseFunction::is_zero() const {
    return std::all_of(table.begin(), table.end(),
                       [&](std::uint64_t v) { return v == codomain.zero(); });
}

bool PhaseFunction::is_constant() const {
    return std::all_of(table.begin(), table.end(), [&](std::uint64_t v) { return v == table[0]; });
}

bool PhaseFunction::is_additive() const {
    for (std::uint64_t x = 0; x < domain.size(); ++x)
        for (std::uint64_t y = 0; y < domain.size(); ++y)
            if (table[domain.add(x, y)] != codomain.add(table[x], table[y])) return false;
    return true;
}

PhaseFunction difference(const PhaseFunction& phi, std::uint64_t h) {
    if (h >= phi.domain.size()) throw std::invalid_argument("difference direction outside domain");
    std::vector<std::uint64_t> out(phi.table.size());
    for (std::uint64_t x = 0; x < phi.domain.size(); ++x)
        out[x] = phi.codomain.sub(phi.table[phi.domain.add(x, h)], phi.table[x]);
    return PhaseFunction(phi.domain, phi.codomain, std::move(out));
}

PhaseFunction iterated_difference(const PhaseFunction& phi,
                                  const std::vector<std::uint64_t>& h_list) {
    PhaseFunction cur = phi;
    for (std::uint64_t h : h_list) cur = difference(cur, h);
    return cur;
}

namespace {

/// All k-fold difference tables, deduplicated level by level.
std::set<std::vector<std::uint64_t>> next_difference_level(
    const PhaseFunction& phi, const std::set<std::vector<std::uint64_t>>& level) {
    std::set<std::vector<std::uint64_t>> next;
    for (const auto& table : level) {
        PhaseFunction f(phi.domain, phi.codomain, table);
        for (std::uint64_t h = 0; h < phi.domain.size(); ++h)
            next.insert(difference(f, h).table);
    }
    return next;
}

bool all_zero(const PhaseFunction& phi, const std::set<std::vector<std::uint64_t>>& level) {
    const std::uint64_t zero = phi.codomain.zero();
    for (const auto& table : level)
        for (std::uint64_t v : table)
            if (v != zero) return false;
    return true;
}

}  // namespace

std::size_t additive_degree(const PhaseFunction& phi, std::size_t degree_cap) {
    std::set<std::vector<std::uint64_t>> level{phi.table};
    for (std::size_t k = 1; k <= degree_cap + 1; ++k) {
        level = next_difference_level(phi, level);
        if (all_zero(phi, level)) return k - 1;
    }
    throw std::domain_error("additive degree exceeds the configured cap");
}

PhaseFunction linear_phase(const Pairing& beta, const std::vector<std::uint64_t>& b) {
    const FiniteRing& ring = beta.ring();
    const std::size_t n = beta.rank_n();
    AdditiveDomain dom = AdditiveDomain::ring_power(ring, n);
    std::vector<std::uint64_t> table(dom.size());
    for (std::uint64_t u = 0; u < dom.size(); ++u)
        table[u] = beta.evaluate(b, tuple_of_index(ring, n, u));
    return PhaseFunction(std::move(dom), ring, std::move(table));
}

DefectReport defect_invariants(const PhaseFunction& phi, std::optional<std::size_t> tensor_index,
                               std::size_t degree_cap) {
    DefectReport rep;
    rep.additive = phi.is_additive();
    rep.constant = phi.is_constant();
    rep.degree = additive_degree(phi, degree_cap);

    // The literal min-form index: least k >= 1 with some nonvanishing k-fold
    // difference. Any nonconstant phase has one at k = 1; a constant phase has
    // none at any k, reported as the degenerate value 0.
    rep.literal_min = rep.constant ? 0 : 1;

    rep.tensor_index = tensor_index.value_or(rep.degree);
    if (rep.constant) {
        // Degenerate case: normalized to {0}, flagged.
        rep.tensor_values = {phi.codomain.zero()};
        rep.additive_convention_flag = true;
        return rep;
    }

    std::set<std::vector<std::uint64_t>> level{phi.table};
    for (std::size_t k = 0; k < rep.tensor_index; ++k) level = next_difference_level(phi, level);
    std::set<std::uint64_t> values;
    for (const auto& table : level) values.insert(table[phi.domain.zero()]);
    rep.tensor_values.assign(values.begin(), values.end());
    // A nonzero additive phase still has nonzero first differences; the
    // normalization "additive => defect 0" is recorded as a flag.
    if (rep.additive)
        rep.additive_convention_flag =
            rep.tensor_values != std::vector<std::uint64_t>{phi.codomain.zero()};
    return rep;
}

CycloMatrix phase_operator(const PhaseFunction& phi, const AdditiveCharacter& chi) {
    if (!chi.ring().same_ring(phi.codomain))
        throw std::invalid_argument("character ring does not match the phase codomain");
    CycloField field = CycloField::make(chi.conductor());
    CycloMatrix m(field, phi.domain.size(), phi.domain.size());
    for (std::uint64_t x = 0; x < phi.domain.size(); ++x) m.set(x, x, chi.value(phi.table[x]));
    return m;
}

AdditiveMap::AdditiveMap(AdditiveDomain f, AdditiveDomain t, std::vector<std::uint64_t> values)
    : from(std::move(f)), to(std::move(t)), table(std::move(values)) {
    if (table.size() != from.size()) throw std::invalid_argument("map table length mismatch");
    for (std::uint64_t v : table)
        if (v >= to.size()) throw std::invalid_argument("map value out of range");
}

bool AdditiveMap::is_additive() const {
    for (std::uint64_t x = 0; x < from.size(); ++x)
        for (std::uint64_t y = 0; y < from.size(); ++y)
            if (table[from.add(x, y)] != to.add(table[x], table[y])) return false;
    return true;
}

AdditiveMap AdditiveMap::identity(const AdditiveDomain& dom) {
    std::vector<std::uint64_t> t(dom.size());
    for (std::uint64_t i = 0; i < dom.size(); ++i) t[i] = i;
    return AdditiveMap(dom, dom, std::move(t));
}

PhaseFunction pullback(const PhaseFunction& phi_on_target, const AdditiveMap& f) {
    if (!(f.to == phi_on_target.domain))
        throw std::invalid_argument("map target does not match the phase domain");
    if (!f.is_additive()) throw std::invalid_argument("pullback along a non-additive map");
    std::vector<std::uint64_t> table(f.from.size());
    for (std::uint64_t x = 0; x < f.from.size(); ++x) table[x] = phi_on_target.table[f.table[x]];
    return PhaseFunction(f.from, phi_on_target.codomain, std::move(table));
}

PhaseFamily::PhaseFamily(AdditiveDomain dom, std::vector<PhaseFunction> phases, InteractionLaw l)
    : domain(std::move(dom)), law(l) {
    for (auto& phi : phases) {
        if (!(phi.domain == domain))
            throw std::invalid_argument("family member on a different domain");
        if (!contains(phi)) members.push_back(std::move(phi));
    }
    if (members.empty()) throw std::invalid_argument("empty phase family");
}

bool PhaseFamily::contains(const PhaseFunction& phi) const {
    for (const auto& member : members)
        if (member.table == phi.table) return true;
    return false;
}

PhaseFamily linear_phase_family(const Pairing& beta) {
    const std::uint64_t size = module_size(beta.ring(), beta.rank_n());
    std::vector<PhaseFunction> phases;
    for (std::uint64_t bi = 0; bi < size; ++bi)
        phases.push_back(linear_phase(beta, tuple_of_index(beta.ring(), beta.rank_n(), bi)));
    return PhaseFamily(AdditiveDomain::ring_power(beta.ring(), beta.rank_n()), std::move(phases),
                       InteractionLaw::composition);
}

AdmissibleDatumReport validate_admissible_datum(const PhaseFamily& family,
                                                const std::vector<AdditiveMap>& morphisms,
                                                const AdditiveCharacter& chi,
                                                std::optional<std::size_t> declared_degree_bound,
                                                std::size_t degree_cap) {
    AdmissibleDatumReport rep;

    // E1: pullback closure under the supplied morphisms.
    for (std::size_t mi = 0; mi < morphisms.size() && rep.functoriality.passed; ++mi) {
        const auto& f = morphisms[mi];
        if (!f.is_additive()) {
            rep.functoriality.passed = false;
            rep.functoriality.witness = "morphism " + std::to_string(mi) + " is not additive";
            break;
        }
        for (std::size_t pi = 0; pi < family.members.size(); ++pi) {
            PhaseFunction pulled = pullback(family.members[pi], f);
            if (!family.contains(pulled)) {
                rep.functoriality.passed = false;
                rep.functoriality.witness = "pullback of member " + std::to_string(pi) +
                                            " along morphism " + std::to_string(mi) +
                                            " leaves the family";
                break;
            }
        }
    }

    // E2: uniform bounded degree.
    for (std::size_t pi = 0; pi < family.members.size(); ++pi) {
        std::size_t d = additive_degree(family.members[pi], degree_cap);
        rep.witnessed_degree = std::max(rep.witnessed_degree, d);
        if (declared_degree_bound && d > *declared_degree_bound && rep.bounded_degree.passed) {
            rep.bounded_degree.passed = false;
            rep.bounded_degree.witness = "member " + std::to_string(pi) + " has degree " +
                                         std::to_string(d) + " > declared bound " +
                                         std::to_string(*declared_degree_bound);
        }
    }

    // E3: operator realisation; phase operators are diagonal with
    // root-of-unity entries, so invertibility amounts to construction.
    for (const auto& phi : family.members) {
        CycloMatrix m = phase_operator(phi, chi);
        bool invertible = true;
        for (std::size_t i = 0; i < m.rows() && invertible; ++i)
            invertible = !m.at(i, i).is_zero();
        if (!invertible) {
            rep.operator_realised.passed = false;
            rep.operator_realised.witness = "non-invertible phase operator";
            break;
        }
    }

    // E4: closure under the declared interaction (composition: pointwise sums).
    if (family.law == InteractionLaw::composition) {
        for (std::size_t i = 0; i < family.members.size() && rep.interaction_closed.passed; ++i)
            for (std::size_t j = 0; j < family.members.size(); ++j) {
                const auto& a = family.members[i];
                const auto& b = family.members[j];
                std::vector<std::uint64_t> sum(a.table.size());
                for (std::size_t x = 0; x < sum.size(); ++x)
                    sum[x] = a.codomain.add(a.table[x], b.table[x]);
                if (!family.contains(PhaseFunction(a.domain, a.codomain, std::move(sum)))) {
                    rep.interaction_closed.passed = false;
                    rep.interaction_closed.witness = "sum of members " + std::to_string(i) +
                                                     " and " + std::to_string(j) +
                                                     " leaves the family";
                    break;
                }
            }
    }
    return rep;
}

}  // namespace heisenrig
