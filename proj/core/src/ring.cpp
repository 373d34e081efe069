#include "heisenrig/ring.hpp"

#include <numeric>
#include <sstream>

namespace heisenrig {
namespace detail {

namespace {

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) throw std::invalid_argument("element count exceeds the configured cap");
        r *= base;
    }
    return r;
}

}  // namespace

/// Per-atom arithmetic on local canonical indices.
struct AtomOps {
    std::uint64_t size = 0;
    std::vector<std::uint64_t> basis_orders;  // one entry per local additive generator

    virtual ~AtomOps() = default;
    virtual std::uint64_t add(std::uint64_t a, std::uint64_t b) const = 0;
    virtual std::uint64_t neg(std::uint64_t a) const = 0;
    virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
    virtual std::uint64_t one() const = 0;
    virtual std::string name(std::uint64_t a) const = 0;
};

struct ModularOps final : AtomOps {
    std::uint64_t m;
    explicit ModularOps(std::uint64_t modulus) : m(modulus) {
        size = m;
        basis_orders = {m};
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const override { return (a + b) % m; }
    std::uint64_t neg(std::uint64_t a) const override { return (m - a) % m; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override { return (a * b) % m; }
    std::uint64_t one() const override { return 1; }
    std::string name(std::uint64_t a) const override { return std::to_string(a); }
};

/// F_p[t]/(f): local index is the base-p expansion of the residue's coefficients.
struct QuotientOps final : AtomOps {
    std::uint64_t p;
    std::string var;
    std::vector<std::uint64_t> f;  // monic, degree d = f.size()-1
    std::size_t deg;

    QuotientOps(const QuotientNode& node, std::uint64_t cap)
        : p(node.p), var(node.var), f(node.poly), deg(node.poly.size() - 1) {
        size = pow_u64_checked(p, deg, cap);
        basis_orders.assign(deg, p);
    }

    std::vector<std::uint64_t> to_poly(std::uint64_t a) const {
        std::vector<std::uint64_t> c(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    }
    std::uint64_t from_poly(const std::vector<std::uint64_t>& c) const {
        std::uint64_t a = 0;
        for (std::size_t i = deg; i-- > 0;) a = a * p + (i < c.size() ? c[i] % p : 0);
        return a;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
        auto ca = to_poly(a), cb = to_poly(b);
        for (std::size_t i = 0; i < deg; ++i) ca[i] = (ca[i] + cb[i]) % p;
        return from_poly(ca);
    }
    std::uint64_t neg(std::uint64_t a) const override {
        auto c = to_poly(a);
        for (auto& x : c) x = (p - x) % p;
        return from_poly(c);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        auto ca = to_poly(a), cb = to_poly(b);
        std::vector<std::uint64_t> prod(2 * deg, 0);
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = 0; j < deg; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        // Reduce mod the monic f: subtract c * x^(k-deg) * f.
        for (std::size_t k = prod.size(); k-- > deg;) {
            std::uint64_t c = prod[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= deg; ++i) {
                std::size_t pos = k - deg + i;
                prod[pos] = (prod[pos] + (p - (c * f[i]) % p)) % p;
            }
        }
        prod.resize(deg);
        return from_poly(prod);
    }
    std::uint64_t one() const override { return 1; }
    std::string name(std::uint64_t a) const override {
        auto c = to_poly(a);
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = deg; i-- > 0;) {
            if (c[i] == 0) continue;
            if (!first) out << "+";
            first = false;
            if (i == 0) {
                out << c[i];
            } else {
                if (c[i] != 1) out << c[i];
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        if (first) out << "0";
        return out.str();
    }
};

/// table{...}: the additive group is (Z/p)^rank; multiplication extends the
/// basis-by-basis table bilinearly (hence is distributive by construction).
struct TableOps final : AtomOps {
    std::uint64_t p;
    std::size_t rank;
    std::vector<std::vector<std::vector<std::uint64_t>>> table;
    std::uint64_t one_index = 0;

    TableOps(const TableNode& node, std::uint64_t cap) : p(node.p), rank(node.rank), table(node.mul) {
        size = pow_u64_checked(p, rank, cap);
        basis_orders.assign(rank, p);
        // Identity search: e * b_j = b_j for every basis element suffices by bilinearity.
        bool found = false;
        for (std::uint64_t e = 0; e < size && !found; ++e) {
            bool ok = true;
            for (std::size_t j = 0; j < rank && ok; ++j) {
                std::uint64_t bj = 1;
                for (std::size_t s = 0; s < j; ++s) bj *= p;
                ok = mul(e, bj) == bj;
            }
            if (ok) {
                one_index = e;
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("table ring has no multiplicative identity");
    }

    std::vector<std::uint64_t> to_coords(std::uint64_t a) const {
        std::vector<std::uint64_t> c(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    }
    std::uint64_t from_coords(const std::vector<std::uint64_t>& c) const {
        std::uint64_t a = 0;
        for (std::size_t i = rank; i-- > 0;) a = a * p + c[i] % p;
        return a;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
        auto ca = to_coords(a), cb = to_coords(b);
        for (std::size_t i = 0; i < rank; ++i) ca[i] = (ca[i] + cb[i]) % p;
        return from_coords(ca);
    }
    std::uint64_t neg(std::uint64_t a) const override {
        auto c = to_coords(a);
        for (auto& x : c) x = (p - x) % p;
        return from_coords(c);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        auto ca = to_coords(a), cb = to_coords(b);
        std::vector<std::uint64_t> out(rank, 0);
        for (std::size_t i = 0; i < rank; ++i) {
            if (ca[i] == 0) continue;
            for (std::size_t j = 0; j < rank; ++j) {
                if (cb[j] == 0) continue;
                std::uint64_t scale = (ca[i] * cb[j]) % p;
                for (std::size_t k = 0; k < rank; ++k)
                    out[k] = (out[k] + scale * table[i][j][k]) % p;
            }
        }
        return from_coords(out);
    }
    std::uint64_t one() const override { return one_index; }
    std::string name(std::uint64_t a) const override {
        auto c = to_coords(a);
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0; i < rank; ++i) {
            if (i) out << ",";
            out << c[i];
        }
        out << ")";
        return out.str();
    }
};

struct RingData {
    RingSpec spec;
    std::vector<std::unique_ptr<AtomOps>> atoms;
    std::vector<std::uint64_t> atom_sizes;
    std::uint64_t size = 1;
    std::vector<AdditiveGenerator> basis;
    std::uint64_t exponent = 1;

    std::vector<std::uint64_t> split(std::uint64_t index) const {
        std::vector<std::uint64_t> parts(atoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            parts[i] = index % atom_sizes[i];
            index /= atom_sizes[i];
        }
        return parts;
    }
    std::uint64_t join(const std::vector<std::uint64_t>& parts) const {
        std::uint64_t index = 0;
        for (std::size_t i = atoms.size(); i-- > 0;) index = index * atom_sizes[i] + parts[i];
        return index;
    }
};

}  // namespace detail

FiniteRing FiniteRing::build(const std::string& spec_text, std::uint64_t element_cap) {
    return build(parse_ring_spec(spec_text), element_cap);
}

FiniteRing FiniteRing::build(const RingSpec& spec, std::uint64_t element_cap) {
    if (spec.factors.empty()) throw std::invalid_argument("ring spec has no factors");
    auto data = std::make_shared<detail::RingData>();
    data->spec = spec;
    bool has_table = false;
    for (const auto& atom : spec.factors) {
        std::unique_ptr<detail::AtomOps> ops;
        if (const auto* z = std::get_if<ModularNode>(&atom)) {
            ops = std::make_unique<detail::ModularOps>(z->modulus);
        } else if (const auto* q = std::get_if<QuotientNode>(&atom)) {
            ops = std::make_unique<detail::QuotientOps>(*q, element_cap);
        } else {
            ops = std::make_unique<detail::TableOps>(std::get<TableNode>(atom), element_cap);
            has_table = true;
        }
        if (data->size > element_cap / ops->size)
            throw std::invalid_argument("element count exceeds the configured cap");
        data->size *= ops->size;
        data->atom_sizes.push_back(ops->size);
        data->atoms.push_back(std::move(ops));
    }

    // Additive basis: concatenate per-atom generators, embedded in the product.
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < data->atoms.size(); ++i) {
        std::uint64_t local = 1;
        for (std::uint64_t order : data->atoms[i]->basis_orders) {
            data->basis.push_back(AdditiveGenerator{stride * local, order});
            data->exponent = std::lcm(data->exponent, order);
            local *= order;
        }
        stride *= data->atom_sizes[i];
    }

    FiniteRing ring(data);
    if (has_table) {
        // Structural atoms are rings by construction; explicit tables are not.
        // The exhaustive triple check refuses oversized inputs rather than sampling.
        if (ring.size() > 4096)
            throw std::invalid_argument(
                "table ring too large for exhaustive ring-axiom verification");
        RingAxiomReport report = verify_ring_axioms(ring);
        if (!report.ok())
            throw std::invalid_argument("table ring fails the ring axioms: " + report.witness);
    }
    return ring;
}

std::uint64_t FiniteRing::size() const { return data_->size; }

std::uint64_t FiniteRing::one() const {
    std::vector<std::uint64_t> parts(data_->atoms.size());
    for (std::size_t i = 0; i < data_->atoms.size(); ++i) parts[i] = data_->atoms[i]->one();
    return data_->join(parts);
}

std::uint64_t FiniteRing::add(std::uint64_t a, std::uint64_t b) const {
    auto pa = data_->split(a), pb = data_->split(b);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = data_->atoms[i]->add(pa[i], pb[i]);
    return data_->join(pa);
}

std::uint64_t FiniteRing::neg(std::uint64_t a) const {
    auto pa = data_->split(a);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = data_->atoms[i]->neg(pa[i]);
    return data_->join(pa);
}

std::uint64_t FiniteRing::mul(std::uint64_t a, std::uint64_t b) const {
    auto pa = data_->split(a), pb = data_->split(b);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = data_->atoms[i]->mul(pa[i], pb[i]);
    return data_->join(pa);
}

const std::vector<AdditiveGenerator>& FiniteRing::additive_basis() const { return data_->basis; }

std::uint64_t FiniteRing::additive_exponent() const { return data_->exponent; }

std::vector<std::uint64_t> FiniteRing::coords(std::uint64_t index) const {
    std::vector<std::uint64_t> c(data_->basis.size());
    for (std::size_t i = 0; i < data_->basis.size(); ++i) {
        c[i] = index % data_->basis[i].order;
        index /= data_->basis[i].order;
    }
    return c;
}

std::uint64_t FiniteRing::from_coords(const std::vector<std::uint64_t>& c) const {
    if (c.size() != data_->basis.size())
        throw std::invalid_argument("coordinate tuple has wrong length");
    std::uint64_t index = 0;
    for (std::size_t i = data_->basis.size(); i-- > 0;)
        index = index * data_->basis[i].order + c[i] % data_->basis[i].order;
    return index;
}

std::string FiniteRing::element_name(std::uint64_t index) const {
    auto parts = data_->split(index);
    if (parts.size() == 1) return data_->atoms[0]->name(parts[0]);
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ", ";
        out << data_->atoms[i]->name(parts[i]);
    }
    out << ")";
    return out.str();
}

const RingSpec& FiniteRing::spec() const { return data_->spec; }

std::string FiniteRing::spec_text() const { return print_ring_spec(data_->spec); }

RingElem FiniteRing::elem(std::uint64_t index) const { return RingElem(*this, index); }

std::vector<RingElem> enumerate_elements(const FiniteRing& ring) {
    std::vector<RingElem> out;
    out.reserve(ring.size());
    for (std::uint64_t i = 0; i < ring.size(); ++i) out.push_back(ring.elem(i));
    return out;
}

std::vector<std::uint64_t> principal_ideal(const FiniteRing& ring, std::uint64_t r) {
    std::vector<bool> seen(ring.size(), false);
    for (std::uint64_t s = 0; s < ring.size(); ++s) seen[ring.mul(r, s)] = true;
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < ring.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

RingAxiomReport verify_ring_axioms(const FiniteRing& ring) {
    RingAxiomReport rep;
    const std::uint64_t n = ring.size();
    auto witness = [&](const char* law, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        if (rep.witness.empty())
            rep.witness = std::string(law) + " at (" + ring.element_name(a) + ", " +
                          ring.element_name(b) + ", " + ring.element_name(c) + ")";
    };

    for (std::uint64_t a = 0; a < n; ++a) {
        if (ring.add(ring.neg(a), a) != ring.zero()) {
            rep.additive_inverse = false;
            witness("additive inverse", a, a, a);
        }
        for (std::uint64_t b = 0; b < n; ++b) {
            if (ring.mul(a, b) != ring.mul(b, a)) {
                rep.commutative = false;
                witness("commutativity", a, b, b);
            }
            for (std::uint64_t c = 0; c < n; ++c) {
                if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) {
                    rep.associative_add = false;
                    witness("additive associativity", a, b, c);
                }
                if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) {
                    rep.associative_mul = false;
                    witness("multiplicative associativity", a, b, c);
                }
                if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) {
                    rep.distributive = false;
                    witness("distributivity", a, b, c);
                }
            }
        }
    }

    std::uint64_t e = ring.one();
    for (std::uint64_t a = 0; a < n; ++a) {
        if (ring.mul(e, a) != a || ring.mul(a, e) != a) {
            rep.has_one = false;
            witness("multiplicative identity", e, a, a);
            break;
        }
    }
    return rep;
}

}  // namespace heisenrig
