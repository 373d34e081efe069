#include "heisenrig/heisenberg.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace heisenrig {
namespace detail {

struct GroupData {
    FiniteRing ring;
    std::size_t n;
    Pairing beta;
    AdditiveCharacter eps;
    std::uint64_t conductor;       // m
    std::uint64_t image_gcd;       // g with mu_R = <zeta_m^g>
    std::uint64_t central_order;   // e = m / g
    std::uint64_t mod_size;        // |R|^n
    std::uint64_t order;           // |R|^{2n} e

    GroupData(FiniteRing r, std::size_t rank, Pairing b, AdditiveCharacter e)
        : ring(std::move(r)), n(rank), beta(std::move(b)), eps(std::move(e)),
          conductor(ring.additive_exponent()) {
        image_gcd = conductor;
        for (std::uint64_t x = 0; x < ring.size(); ++x)
            image_gcd = std::gcd(image_gcd, eps.exponent_of(x));
        if (image_gcd == 0) image_gcd = conductor;  // trivial character
        central_order = conductor / image_gcd;
        mod_size = module_size(ring, n);
        order = mod_size * mod_size * central_order;
    }
};

}  // namespace detail

HeisenbergGroup::HeisenbergGroup(FiniteRing ring, std::size_t n, Pairing beta,
                                 AdditiveCharacter eps) {
    if (!beta.ring().same_ring(ring) || !eps.ring().same_ring(ring))
        throw std::invalid_argument("pairing/character ring mismatch");
    if (beta.rank_n() != n) throw std::invalid_argument("pairing rank mismatch");
    if (!is_generating(eps))
        throw std::invalid_argument("the additive character is not generating");
    data_ = std::make_shared<detail::GroupData>(std::move(ring), n, std::move(beta),
                                                std::move(eps));
}

const FiniteRing& HeisenbergGroup::ring() const { return data_->ring; }
std::size_t HeisenbergGroup::rank_n() const { return data_->n; }
const Pairing& HeisenbergGroup::pairing() const { return data_->beta; }
const AdditiveCharacter& HeisenbergGroup::character() const { return data_->eps; }
std::uint64_t HeisenbergGroup::central_order() const { return data_->central_order; }
std::uint64_t HeisenbergGroup::conductor() const { return data_->conductor; }
std::uint64_t HeisenbergGroup::order() const { return data_->order; }
std::uint64_t HeisenbergGroup::module_size() const { return data_->mod_size; }

GroupElement HeisenbergGroup::identity_element() const {
    return GroupElement{std::vector<std::uint64_t>(data_->n, data_->ring.zero()),
                        std::vector<std::uint64_t>(data_->n, data_->ring.zero()), 0};
}

std::uint64_t HeisenbergGroup::conductor_exponent_of(std::uint64_t ring_elem) const {
    return data_->eps.exponent_of(ring_elem);
}

std::uint64_t HeisenbergGroup::central_exponent_of(std::uint64_t ring_elem) const {
    std::uint64_t e = data_->eps.exponent_of(ring_elem);
    // e is a multiple of image_gcd by construction of mu_R.
    return (e / data_->image_gcd) % data_->central_order;
}

namespace {

void check_element(const detail::GroupData& data, const GroupElement& g) {
    if (g.x.size() != data.n || g.y.size() != data.n)
        throw std::invalid_argument("group element has the wrong rank for this group");
    for (std::uint64_t xi : g.x)
        if (xi >= data.ring.size())
            throw std::invalid_argument("group element component outside the ring");
    for (std::uint64_t yi : g.y)
        if (yi >= data.ring.size())
            throw std::invalid_argument("group element component outside the ring");
    if (g.k >= data.central_order)
        throw std::invalid_argument("central exponent outside mu_R");
}

}  // namespace

GroupElement HeisenbergGroup::multiply(const GroupElement& g, const GroupElement& h) const {
    check_element(*data_, g);
    check_element(*data_, h);
    const FiniteRing& ring = data_->ring;
    GroupElement out;
    out.x.resize(data_->n);
    out.y.resize(data_->n);
    for (std::size_t i = 0; i < data_->n; ++i) {
        out.x[i] = ring.add(g.x[i], h.x[i]);
        out.y[i] = ring.add(g.y[i], h.y[i]);
    }
    std::uint64_t twist = central_exponent_of(data_->beta.evaluate(h.y, g.x));
    out.k = (g.k + h.k + twist) % data_->central_order;
    return out;
}

GroupElement HeisenbergGroup::inverse(const GroupElement& g) const {
    check_element(*data_, g);
    const FiniteRing& ring = data_->ring;
    GroupElement out;
    out.x.resize(data_->n);
    out.y.resize(data_->n);
    for (std::size_t i = 0; i < data_->n; ++i) {
        out.x[i] = ring.neg(g.x[i]);
        out.y[i] = ring.neg(g.y[i]);
    }
    // (x,y,l)^{-1} = (-x,-y, l^{-1} eps(beta(y,x))).
    std::uint64_t twist = central_exponent_of(data_->beta.evaluate(g.y, g.x));
    out.k = (data_->central_order - g.k + twist) % data_->central_order;
    return out;
}

GroupElement HeisenbergGroup::conjugate(const GroupElement& a, const GroupElement& g) const {
    return multiply(multiply(a, g), inverse(a));
}

std::uint64_t HeisenbergGroup::element_index(const GroupElement& g) const {
    std::uint64_t xi = index_of_tuple(data_->ring, g.x);
    std::uint64_t yi = index_of_tuple(data_->ring, g.y);
    return xi + data_->mod_size * (yi + data_->mod_size * g.k);
}

GroupElement HeisenbergGroup::element_of_index(std::uint64_t index) const {
    GroupElement g;
    std::uint64_t xi = index % data_->mod_size;
    index /= data_->mod_size;
    std::uint64_t yi = index % data_->mod_size;
    g.k = index / data_->mod_size;
    g.x = tuple_of_index(data_->ring, data_->n, xi);
    g.y = tuple_of_index(data_->ring, data_->n, yi);
    return g;
}

std::vector<GroupElement> HeisenbergGroup::x_generators() const {
    std::vector<GroupElement> gens;
    for (std::size_t coord = 0; coord < data_->n; ++coord)
        for (const auto& gen : data_->ring.additive_basis()) {
            GroupElement g = identity_element();
            g.x[coord] = gen.element;
            gens.push_back(std::move(g));
        }
    return gens;
}

std::vector<GroupElement> HeisenbergGroup::y_generators() const {
    std::vector<GroupElement> gens;
    for (std::size_t coord = 0; coord < data_->n; ++coord)
        for (const auto& gen : data_->ring.additive_basis()) {
            GroupElement g = identity_element();
            g.y[coord] = gen.element;
            gens.push_back(std::move(g));
        }
    return gens;
}

GroupElement HeisenbergGroup::central_generator() const {
    GroupElement g = identity_element();
    g.k = 1;
    return g;
}

std::vector<GroupElement> HeisenbergGroup::generators() const {
    std::vector<GroupElement> gens = x_generators();
    auto ygens = y_generators();
    gens.insert(gens.end(), ygens.begin(), ygens.end());
    gens.push_back(central_generator());
    return gens;
}

std::vector<std::uint64_t> HeisenbergGroup::generator_word(const GroupElement& g) const {
    // g = z^k * prod_i (0, c_i g_i, 1) * prod_i (c_i g_i, 0, 1): the cocycle is
    // trivial inside X, inside Y, and between Y and X in this order, so the
    // coordinates of x and y over the additive basis are the literal exponents.
    std::vector<std::uint64_t> word;
    for (std::size_t coord = 0; coord < data_->n; ++coord) {
        auto c = data_->ring.coords(g.x[coord]);
        word.insert(word.end(), c.begin(), c.end());
    }
    for (std::size_t coord = 0; coord < data_->n; ++coord) {
        auto c = data_->ring.coords(g.y[coord]);
        word.insert(word.end(), c.begin(), c.end());
    }
    word.push_back(g.k);
    return word;
}

std::string HeisenbergGroup::element_name(const GroupElement& g) const {
    std::ostringstream out;
    auto tuple = [&](const std::vector<std::uint64_t>& t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out << ",";
            out << data_->ring.element_name(t[i]);
        }
    };
    out << "(";
    tuple(g.x);
    out << " | ";
    tuple(g.y);
    out << " | zeta^" << g.k << ")";
    return out.str();
}

std::vector<GroupElement> enumerate_group(const HeisenbergGroup& group, std::uint64_t cap) {
    if (group.order() > cap) throw std::invalid_argument("group order exceeds the enumeration cap");
    std::vector<GroupElement> out;
    out.reserve(group.order());
    for (std::uint64_t i = 0; i < group.order(); ++i) out.push_back(group.element_of_index(i));
    return out;
}

std::vector<GroupElement> generate(const HeisenbergGroup& group, std::uint64_t cap) {
    if (group.order() > cap) throw std::invalid_argument("group order exceeds the enumeration cap");
    std::set<std::uint64_t> seen{group.element_index(group.identity_element())};
    std::vector<GroupElement> frontier{group.identity_element()};
    auto gens = group.generators();
    std::vector<GroupElement> all{group.identity_element()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                GroupElement h = group.multiply(g, s);
                if (seen.insert(group.element_index(h)).second) {
                    all.push_back(h);
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return all;
}

std::vector<GroupElement> centre(const HeisenbergGroup& group, std::uint64_t cap) {
    auto gens = group.generators();
    std::vector<GroupElement> out;
    for (const auto& g : enumerate_group(group, cap)) {
        bool central = true;
        for (const auto& s : gens)
            if (!(group.multiply(g, s) == group.multiply(s, g))) {
                central = false;
                break;
            }
        if (central) out.push_back(g);
    }
    return out;
}

bool centre_is_mu_R(const std::vector<GroupElement>& centre_elements) {
    for (const auto& g : centre_elements) {
        for (std::uint64_t xi : g.x)
            if (xi != 0) return false;
        for (std::uint64_t yi : g.y)
            if (yi != 0) return false;
    }
    return true;
}

GroupAxiomCertificate verify_group_axioms(const HeisenbergGroup& group,
                                          std::uint64_t exhaustive_cap,
                                          std::uint64_t enumeration_cap,
                                          std::uint64_t random_triples, std::uint64_t seed) {
    GroupAxiomCertificate cert;
    auto elements = enumerate_group(group, enumeration_cap);
    const GroupElement id = group.identity_element();

    for (const auto& g : elements) {
        if (!(group.multiply(g, id) == g) || !(group.multiply(id, g) == g)) {
            cert.identity_ok = false;
            cert.witness = "identity law at " + group.element_name(g);
        }
        GroupElement gi = group.inverse(g);
        if (!(group.multiply(g, gi) == id) || !(group.multiply(gi, g) == id)) {
            cert.inverse_ok = false;
            cert.witness = "inverse law at " + group.element_name(g);
        }
    }

    auto assoc = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c) {
        ++cert.triples_checked;
        if (!(group.multiply(group.multiply(a, b), c) == group.multiply(a, group.multiply(b, c)))) {
            cert.associative = false;
            if (cert.witness.empty())
                cert.witness = "associativity at (" + group.element_name(a) + ", " +
                               group.element_name(b) + ", " + group.element_name(c) + ")";
        }
    };
    if (group.order() <= exhaustive_cap) {
        for (const auto& a : elements)
            for (const auto& b : elements)
                for (const auto& c : elements) assoc(a, b, c);
    } else {
        cert.exhaustive = false;
        auto gens = group.generators();
        for (const auto& a : gens)
            for (const auto& b : gens)
                for (const auto& c : gens) assoc(a, b, c);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, group.order() - 1);
        for (std::uint64_t i = 0; i < random_triples; ++i)
            assoc(group.element_of_index(pick(rng)), group.element_of_index(pick(rng)),
                  group.element_of_index(pick(rng)));
    }

    // 2-cocycle identity c(g,h) c(gh,k) = c(h,k) c(g,hk) on the R^{2n} quotient,
    // with c((x,y),(x',y')) = eps(beta(y',x)): checked on exponents mod m.
    const std::uint64_t m = group.conductor();
    const FiniteRing& ring = group.ring();
    const std::size_t n = group.rank_n();
    const std::uint64_t msize = group.module_size();
    auto cocycle = [&](std::uint64_t gx, std::uint64_t hy) {
        return group.conductor_exponent_of(
            group.pairing().evaluate(tuple_of_index(ring, n, hy), tuple_of_index(ring, n, gx)));
    };
    auto add_tuple = [&](std::uint64_t a, std::uint64_t b) {
        auto ta = tuple_of_index(ring, n, a);
        auto tb = tuple_of_index(ring, n, b);
        for (std::size_t i = 0; i < n; ++i) ta[i] = ring.add(ta[i], tb[i]);
        return index_of_tuple(ring, ta);
    };
    // The identity only involves g.x, h.x, h.y and k.y:
    //   c(g,h) c(gh,k) = eps(beta(h.y,g.x)) eps(beta(k.y,g.x+h.x))
    //   c(h,k) c(g,hk) = eps(beta(k.y,h.x)) eps(beta(h.y+k.y,g.x)).
    const std::uint64_t cocycle_span = msize * msize <= exhaustive_cap ? msize : 1;
    for (std::uint64_t gx = 0; gx < cocycle_span && cert.cocycle_identity; ++gx)
        for (std::uint64_t hx = 0; hx < cocycle_span && cert.cocycle_identity; ++hx)
            for (std::uint64_t hy = 0; hy < cocycle_span && cert.cocycle_identity; ++hy)
                for (std::uint64_t ky = 0; ky < cocycle_span; ++ky) {
                    std::uint64_t lhs = (cocycle(gx, hy) + cocycle(add_tuple(gx, hx), ky)) % m;
                    std::uint64_t rhs = (cocycle(hx, ky) + cocycle(gx, add_tuple(hy, ky))) % m;
                    if (lhs != rhs) {
                        cert.cocycle_identity = false;
                        if (cert.witness.empty()) cert.witness = "cocycle identity";
                        break;
                    }
                }

    auto generated = generate(group, enumeration_cap);
    cert.generators_generate = generated.size() == group.order();
    if (!cert.generators_generate && cert.witness.empty())
        cert.witness = "generators span only " + std::to_string(generated.size()) + " of " +
                       std::to_string(group.order()) + " elements";
    return cert;
}

}  // namespace heisenrig
