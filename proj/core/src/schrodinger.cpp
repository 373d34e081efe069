#include "heisenrig/schrodinger.hpp"

#include <random>

namespace heisenrig {

namespace {

std::vector<std::uint64_t> add_tuples(const FiniteRing& ring, const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
    return out;
}

std::vector<std::uint64_t> neg_tuple(const FiniteRing& ring, const std::vector<std::uint64_t>& a) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.neg(a[i]);
    return out;
}

void check_tuple(const HeisenbergGroup& group, const std::vector<std::uint64_t>& t) {
    if (t.size() != group.rank_n())
        throw std::invalid_argument("tuple has the wrong rank for this group");
    for (std::uint64_t v : t)
        if (v >= group.ring().size())
            throw std::invalid_argument("tuple component outside the ring");
}

}  // namespace

CycloMatrix translation_matrix(const HeisenbergGroup& group, const std::vector<std::uint64_t>& x) {
    check_tuple(group, x);
    const FiniteRing& ring = group.ring();
    const std::uint64_t dim = group.module_size();
    CycloField field = CycloField::make(group.conductor());
    CycloMatrix m(field, dim, dim);
    for (std::uint64_t v = 0; v < dim; ++v) {
        auto a = tuple_of_index(ring, group.rank_n(), v);
        std::uint64_t target = index_of_tuple(ring, add_tuples(ring, a, neg_tuple(ring, x)));
        m.set(target, v, field.one());
    }
    return m;
}

CycloMatrix modulation_matrix(const HeisenbergGroup& group, const std::vector<std::uint64_t>& y) {
    check_tuple(group, y);
    const FiniteRing& ring = group.ring();
    const std::uint64_t dim = group.module_size();
    CycloField field = CycloField::make(group.conductor());
    CycloMatrix m(field, dim, dim);
    for (std::uint64_t u = 0; u < dim; ++u) {
        auto ut = tuple_of_index(ring, group.rank_n(), u);
        std::uint64_t e = group.conductor_exponent_of(group.pairing().evaluate(y, ut));
        m.set(u, u, field.root_of_unity(static_cast<std::int64_t>(e)));
    }
    return m;
}

CycloMatrix pi_matrix(const HeisenbergGroup& group, const GroupElement& g) {
    // lambda M_y T_x: entry [v - x, v] = lambda eps(beta(y, v - x)).
    const FiniteRing& ring = group.ring();
    const std::uint64_t dim = group.module_size();
    CycloField field = CycloField::make(group.conductor());
    const std::uint64_t step = group.conductor() / group.central_order();
    CycloMatrix m(field, dim, dim);
    for (std::uint64_t v = 0; v < dim; ++v) {
        auto vt = tuple_of_index(ring, group.rank_n(), v);
        auto target_tuple = add_tuples(ring, vt, neg_tuple(ring, g.x));
        std::uint64_t target = index_of_tuple(ring, target_tuple);
        std::uint64_t e = group.conductor_exponent_of(group.pairing().evaluate(g.y, target_tuple));
        e = (e + g.k * step) % group.conductor();
        m.set(target, v, field.root_of_unity(static_cast<std::int64_t>(e)));
    }
    return m;
}

Representation::Representation(HeisenbergGroup group, std::vector<CycloMatrix> generator_matrices,
                               std::string label)
    : group_(std::move(group)),
      dimension_(generator_matrices.empty() ? 0 : generator_matrices[0].rows()),
      field_(CycloField::make(group_.conductor())),
      gen_matrices_(std::move(generator_matrices)),
      label_(std::move(label)) {
    if (gen_matrices_.size() != group_.generators().size())
        throw std::invalid_argument("one matrix per group generator required");
    for (const auto& m : gen_matrices_)
        if (m.rows() != dimension_ || m.cols() != dimension_)
            throw std::invalid_argument("generator matrices must be square of equal size");
}

Representation::Representation(HeisenbergGroup group, std::size_t dimension,
                               std::function<CycloMatrix(const GroupElement&)> closed_form,
                               std::string label)
    : group_(std::move(group)),
      dimension_(dimension),
      field_(CycloField::make(group_.conductor())),
      closed_form_(std::move(closed_form)),
      label_(std::move(label)) {
    for (const auto& g : group_.generators()) gen_matrices_.push_back(closed_form_(g));
}

CycloMatrix Representation::matrix(const GroupElement& g) const {
    if (closed_form_) return closed_form_(g);
    return matrix_by_word(g);
}

CycloMatrix Representation::matrix_by_word(const GroupElement& g) const {
    // Word order matches generator_word: central^k first, then Y-part, then
    // X-part; rho(g) = rho(z)^k * prod rho(ygen)^c * prod rho(xgen)^c.
    auto word = group_.generator_word(g);
    const std::size_t rank = group_.ring().additive_basis().size() * group_.rank_n();
    CycloMatrix result = gen_matrices_.back().pow(word.back());  // central generator
    for (std::size_t i = 0; i < rank; ++i)  // y-generators
        result = result * gen_matrices_[rank + i].pow(word[rank + i]);
    for (std::size_t i = 0; i < rank; ++i)  // x-generators
        result = result * gen_matrices_[i].pow(word[i]);
    return result;
}

Representation schrodinger_representation(const HeisenbergGroup& group) {
    return Representation(group, group.module_size(),
                          [group](const GroupElement& g) { return pi_matrix(group, g); },
                          "schrodinger");
}

Representation trivial_representation(const HeisenbergGroup& group) {
    CycloField field = CycloField::make(group.conductor());
    return Representation(group, 1,
                          [field](const GroupElement&) { return CycloMatrix::identity(field, 1); },
                          "trivial");
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!a.group().same_group(b.group())) throw std::invalid_argument("mixed-group direct sum");
    const HeisenbergGroup group = a.group();
    const std::size_t da = a.dimension(), db = b.dimension();
    auto eval_a = [a](const GroupElement& g) { return a.matrix(g); };
    auto eval_b = [b](const GroupElement& g) { return b.matrix(g); };
    CycloField field = CycloField::make(group.conductor());
    return Representation(
        group, da + db,
        [=](const GroupElement& g) {
            CycloMatrix ma = eval_a(g), mb = eval_b(g);
            CycloMatrix out(field, da + db, da + db);
            for (std::size_t r = 0; r < da; ++r)
                for (std::size_t c = 0; c < da; ++c) out.set(r, c, ma.at(r, c));
            for (std::size_t r = 0; r < db; ++r)
                for (std::size_t c = 0; c < db; ++c) out.set(da + r, da + c, mb.at(r, c));
            return out;
        },
        a.label() + "+" + b.label());
}

WeylCertificate verify_weyl(const HeisenbergGroup& group, std::uint64_t pair_cap) {
    WeylCertificate cert;
    const FiniteRing& ring = group.ring();
    const std::size_t n = group.rank_n();
    const std::uint64_t msize = group.module_size();
    CycloField field = CycloField::make(group.conductor());

    std::vector<std::vector<std::uint64_t>> xs;
    if (msize <= pair_cap) {
        for (std::uint64_t i = 0; i < msize; ++i) xs.push_back(tuple_of_index(ring, n, i));
    } else {
        cert.exhaustive = false;
        for (const auto& g : group.x_generators()) xs.push_back(g.x);
        xs.push_back(std::vector<std::uint64_t>(n, ring.zero()));
    }
    for (const auto& x : xs) {
        CycloMatrix tx = translation_matrix(group, x);
        for (const auto& y : xs) {
            CycloMatrix my = modulation_matrix(group, y);
            std::uint64_t e = group.conductor_exponent_of(group.pairing().evaluate(y, x));
            CycloNum scalar = field.root_of_unity(static_cast<std::int64_t>(e));
            ++cert.pairs_checked;
            if (!(tx * my == scalar * (my * tx))) {
                cert.holds = false;
                if (cert.witness.empty()) {
                    cert.witness = "x=(";
                    for (std::size_t i = 0; i < n; ++i)
                        cert.witness += (i ? "," : "") + ring.element_name(x[i]);
                    cert.witness += ") y=(";
                    for (std::size_t i = 0; i < n; ++i)
                        cert.witness += (i ? "," : "") + ring.element_name(y[i]);
                    cert.witness += ")";
                }
            }
        }
    }
    return cert;
}

HomomorphismCertificate verify_homomorphism(const Representation& rep, std::uint64_t group_cap,
                                            std::uint64_t random_pairs, std::uint64_t seed) {
    HomomorphismCertificate cert;
    const HeisenbergGroup& group = rep.group();

    auto check_pair = [&](const GroupElement& g, const GroupElement& h,
                          const CycloMatrix& mg, const CycloMatrix& mh) {
        ++cert.pairs_checked;
        if (!(rep.matrix(group.multiply(g, h)) == mg * mh)) {
            cert.holds = false;
            if (cert.witness.empty())
                cert.witness =
                    "pair " + group.element_name(g) + " * " + group.element_name(h);
        }
    };

    if (group.order() <= group_cap) {
        auto elements = enumerate_group(group);
        std::vector<CycloMatrix> mats;
        mats.reserve(elements.size());
        for (const auto& g : elements) mats.push_back(rep.matrix(g));
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t j = 0; j < elements.size(); ++j)
                check_pair(elements[i], elements[j], mats[i], mats[j]);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            ++cert.inverses_checked;
            if (!((mats[i] * rep.matrix(group.inverse(elements[i]))) ==
                  CycloMatrix::identity(rep.field(), rep.dimension()))) {
                cert.holds = false;
                if (cert.witness.empty())
                    cert.witness = "inverse at " + group.element_name(elements[i]);
            }
        }
    } else {
        cert.exhaustive = false;
        auto gens = group.generators();
        for (const auto& g : gens)
            for (const auto& h : gens) check_pair(g, h, rep.matrix(g), rep.matrix(h));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, group.order() - 1);
        for (std::uint64_t i = 0; i < random_pairs; ++i) {
            GroupElement g = group.element_of_index(pick(rng));
            GroupElement h = group.element_of_index(pick(rng));
            check_pair(g, h, rep.matrix(g), rep.matrix(h));
            ++cert.inverses_checked;
            if (!((rep.matrix(g) * rep.matrix(group.inverse(g))) ==
                  CycloMatrix::identity(rep.field(), rep.dimension()))) {
                cert.holds = false;
                if (cert.witness.empty()) cert.witness = "inverse at " + group.element_name(g);
            }
        }
    }
    return cert;
}

CentralCharacterReport central_character(const Representation& rep) {
    CentralCharacterReport report;
    const HeisenbergGroup& group = rep.group();
    CycloField field = CycloField::make(group.conductor());
    const std::uint64_t step = group.conductor() / group.central_order();
    for (std::uint64_t k = 0; k < group.central_order(); ++k) {
        GroupElement z = group.identity_element();
        z.k = k;
        auto scalar = rep.matrix(z).scalar_value();
        if (!scalar) {
            report.scalar_action = false;
            report.witness = "centre does not act by a scalar at k=" + std::to_string(k);
            return report;
        }
        report.scalars.push_back(*scalar);
    }
    report.identity_character = true;
    for (std::uint64_t k = 0; k < group.central_order(); ++k)
        if (!(report.scalars[k] == field.root_of_unity(static_cast<std::int64_t>(k * step))))
            report.identity_character = false;
    for (std::uint64_t k = 0; k < group.central_order(); ++k)
        if (!report.scalars[k].is_one()) report.centrally_faithful = true;
    return report;
}

Representation induced_representation(const HeisenbergGroup& group) {
    // Basis e_x indexed by coset representatives (x,0,1) of YZ; for
    // g = (a,b,lambda):  g (x,0,1) = (a+x,0,1) (0,b,mu) with
    // mu = lambda eps(beta(b,a+x))^{-1}, so rho(g) e_x = mu e_{a+x}.
    const FiniteRing& ring = group.ring();
    const std::uint64_t dim = group.module_size();
    const std::uint64_t m = group.conductor();
    const std::uint64_t step = m / group.central_order();
    CycloField field = CycloField::make(m);
    return Representation(
        group, dim,
        [=](const GroupElement& g) {
            CycloMatrix out(field, dim, dim);
            for (std::uint64_t xi = 0; xi < dim; ++xi) {
                auto x = tuple_of_index(ring, group.rank_n(), xi);
                auto ax = add_tuples(ring, g.x, x);
                std::uint64_t e = group.conductor_exponent_of(group.pairing().evaluate(g.y, ax));
                std::uint64_t exp = (g.k * step % m + m - e) % m;
                out.set(index_of_tuple(ring, ax), xi,
                        field.root_of_unity(static_cast<std::int64_t>(exp)));
            }
            return out;
        },
        "induced");
}

InducedIso induced_iso(const HeisenbergGroup& group) {
    // Send the induced generator e_0 to delta_0 and extend along the X-action:
    // column x of the intertwiner is pi(x,0,1) delta_0.
    const FiniteRing& ring = group.ring();
    const std::uint64_t dim = group.module_size();
    CycloField field = CycloField::make(group.conductor());
    InducedIso iso{CycloMatrix(field, dim, dim), true, true};
    for (std::uint64_t xi = 0; xi < dim; ++xi) {
        GroupElement g = group.identity_element();
        g.x = tuple_of_index(ring, group.rank_n(), xi);
        CycloMatrix image = pi_matrix(group, g);  // column 0 is pi(x,0,1) delta_0
        for (std::uint64_t r = 0; r < dim; ++r) iso.intertwiner.set(r, xi, image.at(r, 0));
    }
    iso.bijective = det_nonzero(iso.intertwiner);
    Representation ind = induced_representation(group);
    for (const auto& gen : group.generators()) {
        if (!(iso.intertwiner * ind.matrix(gen) == pi_matrix(group, gen) * iso.intertwiner)) {
            iso.equivariant = false;
            break;
        }
    }
    return iso;
}

CycloMatrix fourier_kernel(const HeisenbergGroup& group) {
    OrbitReport orbit = character_orbit(group.pairing(), group.character());
    if (!orbit.full)
        throw std::domain_error("fourier kernel is singular: character orbit is not full (size " +
                                std::to_string(orbit.orbit_size) + " of " +
                                std::to_string(orbit.dual_size) + ")");
    const FiniteRing& ring = group.ring();
    const std::uint64_t dim = group.module_size();
    CycloField field = CycloField::make(group.conductor());
    CycloMatrix f(field, dim, dim);
    for (std::uint64_t v = 0; v < dim; ++v) {
        auto vt = tuple_of_index(ring, group.rank_n(), v);
        for (std::uint64_t u = 0; u < dim; ++u) {
            auto ut = tuple_of_index(ring, group.rank_n(), u);
            std::uint64_t e = group.conductor_exponent_of(group.pairing().evaluate(vt, ut));
            f.set(v, u, field.root_of_unity(static_cast<std::int64_t>(e)));
        }
    }
    return f;
}

Representation fourier_model(const HeisenbergGroup& group) {
    CycloMatrix f = fourier_kernel(group);
    CycloMatrix finv = inverse(f);
    std::vector<CycloMatrix> gens;
    for (const auto& g : group.generators()) gens.push_back(f * pi_matrix(group, g) * finv);
    return Representation(group, std::move(gens), "fourier");
}

ConjugatedModel conjugated_model(const HeisenbergGroup& group, std::uint64_t seed) {
    const std::uint64_t dim = group.module_size();
    CycloField field = CycloField::make(group.conductor());
    std::mt19937_64 rng(seed);
    // Entries in [-3, 3] drawn straight off the engine so the conjugator (and
    // every report derived from it) is identical across standard libraries.
    auto entry = [&rng]() { return static_cast<long>(rng() % 7) - 3; };
    CycloMatrix c(field, dim, dim);
    do {
        for (std::uint64_t r = 0; r < dim; ++r)
            for (std::uint64_t col = 0; col < dim; ++col)
                c.set(r, col, field.from_rational(make_rational(entry())));
    } while (!det_nonzero(c));
    CycloMatrix cinv = inverse(c);
    std::vector<CycloMatrix> gens;
    for (const auto& g : group.generators()) gens.push_back(c * pi_matrix(group, g) * cinv);
    return ConjugatedModel{Representation(group, std::move(gens), "conjugated"), std::move(c)};
}

}  // namespace heisenrig
