#include "heisenrig/report.hpp"

#include <sstream>

namespace heisenrig {

namespace {

Json config_echo(const RunConfig& config) {
    Json j;
    j["ring"] = config.ring_text;
    j["n"] = config.n;
    j["pairing"] = config.pairing.empty() ? Json("identity") : Json(config.pairing);
    j["char"] = config.character ? Json(*config.character) : Json("auto");
    j["models"] = config.models;
    j["seed"] = config.seed;
    j["caps"] = Json{{"elems", config.cap_elems},
                     {"pairs", config.cap_pairs},
                     {"degree", config.cap_degree}};
    return j;
}

Json report_shell(const std::string& command, const RunConfig& config) {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = config_echo(config);
    return j;
}

FiniteRing build_ring_from(const RunConfig& config) {
    return FiniteRing::build(config.ring_text, config.cap_elems);
}

AdditiveCharacter pick_character(const FiniteRing& ring, const RunConfig& config) {
    if (config.character) return AdditiveCharacter(ring, *config.character);
    FrobeniusCertificate cert = certify_frobenius(ring);
    if (!cert.frobenius)
        throw std::invalid_argument(
            "ring has no generating character; supply --char explicitly");
    return *cert.generating;
}

Pairing pick_pairing(const FiniteRing& ring, const RunConfig& config) {
    return config.pairing.empty() ? Pairing::identity(ring, config.n)
                                  : Pairing(ring, config.n, config.pairing);
}

}  // namespace

Json matrix_to_json(const CycloMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Json element_to_json(const GroupElement& g) {
    return Json{{"x", g.x}, {"y", g.y}, {"k", g.k}};
}

/// Model factory for the CLI surface: schrodinger | induced | fourier |
/// conjugated[:seed].
Representation select_model(const HeisenbergGroup& group, const std::string& name,
                            std::uint64_t seed) {
    if (name == "schrodinger") return schrodinger_representation(group);
    if (name == "induced") return induced_representation(group);
    if (name == "fourier") return fourier_model(group);
    if (name.rfind("conjugated", 0) == 0) {
        auto colon = name.find(':');
        std::uint64_t s = colon == std::string::npos ? seed : std::stoull(name.substr(colon + 1));
        return conjugated_model(group, s).rep;
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace

CommandResult cmd_ring(const RunConfig& config) {
    Json j = report_shell("ring", config);
    FiniteRing ring = build_ring_from(config);
    Json res;
    res["order"] = ring.size();
    res["exponent"] = ring.additive_exponent();
    Json basis = Json::array();
    for (const auto& gen : ring.additive_basis())
        basis.push_back(Json{{"element", ring.element_name(gen.element)},
                             {"index", gen.element},
                             {"order", gen.order}});
    res["additive_basis"] = std::move(basis);
    res["one"] = ring.one();
    if (config.show_table) {
        Json add = Json::array(), mul = Json::array();
        for (std::uint64_t a = 0; a < ring.size(); ++a) {
            Json ra = Json::array(), rm = Json::array();
            for (std::uint64_t b = 0; b < ring.size(); ++b) {
                ra.push_back(ring.add(a, b));
                rm.push_back(ring.mul(a, b));
            }
            add.push_back(std::move(ra));
            mul.push_back(std::move(rm));
        }
        res["add_table"] = std::move(add);
        res["mul_table"] = std::move(mul);
        Json names = Json::array();
        for (std::uint64_t a = 0; a < ring.size(); ++a) names.push_back(ring.element_name(a));
        res["element_names"] = std::move(names);
    }
    j["results"] = std::move(res);
    j["status"] = "ok";
    return CommandResult{std::move(j), 0};
}

CommandResult cmd_frobenius(const RunConfig& config) {
    Json j = report_shell("frobenius", config);
    FiniteRing ring = build_ring_from(config);
    FrobeniusCertificate cert = certify_frobenius(ring);
    Json res;
    res["frobenius"] = cert.frobenius;
    if (cert.frobenius) {
        res["generating_character"] = Json{{"exponents", cert.generating->exponents()},
                                           {"description", cert.generating->describe()}};
    } else {
        Json witnesses = Json::array();
        auto chars = all_characters(ring);
        for (std::size_t i = 0; i < cert.witnesses.size(); ++i)
            witnesses.push_back(Json{{"character", chars[i].exponents()},
                                     {"witness", ring.element_name(cert.witnesses[i])},
                                     {"witness_index", cert.witnesses[i]}});
        res["ideal_witnesses"] = std::move(witnesses);
    }
    j["results"] = std::move(res);
    j["status"] = "ok";
    return CommandResult{std::move(j), 0};
}

CommandResult cmd_svn(const RunConfig& config) {
    Json j = report_shell("svn", config);
    FiniteRing ring = build_ring_from(config);
    SvnConfig svn;
    svn.n = config.n;
    svn.pairing = config.pairing;
    svn.character = config.character;
    svn.models = config.models;
    svn.seed = config.seed;
    svn.enumeration_cap = config.cap_elems;
    SvnReport rep = stone_von_neumann_verify(ring, svn);

    Json res;
    res["frobenius"] = rep.frobenius;
    res["nondegenerate"] = rep.nondegenerate;
    if (!rep.generating_character.empty()) res["generating_character"] = rep.generating_character;
    if (rep.frobenius) {
        // Both cocycle orientations for comparison; they define isomorphic
        // extensions and coincide exactly for symmetric pairings.
        Pairing beta = pick_pairing(ring, config);
        res["cocycle"] = Json{{"adopted", "eps(beta(y',x))"},
                              {"display_variant", "eps(beta(y,x'))"},
                              {"variants_agree", is_symmetric(beta)}};
    }
    res["central_order"] = rep.central_order;
    res["orbit_size"] = rep.orbit_size;
    res["dual_size"] = rep.dual_size;
    if (rep.nondegenerate || rep.centre_size) res["conjugation_sign"] = rep.conjugation_sign;
    if (rep.centre_size) res["centre_size"] = *rep.centre_size;
    if (!rep.centre_sample.empty()) {
        Json sample = Json::array();
        for (const auto& g : rep.centre_sample) sample.push_back(element_to_json(g));
        res["centre_sample"] = std::move(sample);
    }
    if (rep.max_orbit_over_all) res["max_orbit_over_all_pairings"] = *rep.max_orbit_over_all;
    if (!rep.character_witnesses.empty()) res["character_witnesses"] = rep.character_witnesses;
    Json models = Json::array();
    for (const auto& m : rep.models)
        models.push_back(Json{{"label", m.label},
                              {"central_scalar", m.central_scalar},
                              {"central_identity_character", m.central_identity},
                              {"frobenius_indecomposable", m.indecomposable}});
    res["models"] = std::move(models);
    Json pairs = Json::array();
    for (const auto& p : rep.pairs) {
        Json jp{{"from", p.from},
                {"to", p.to},
                {"hom_dimension", p.hom_dimension},
                {"witness_invertible", p.witness_invertible}};
        if (p.conjugator_recovered) jp["conjugator_recovered"] = *p.conjugator_recovered;
        if (p.witness) jp["witness"] = matrix_to_json(*p.witness);
        pairs.push_back(std::move(jp));
    }
    res["pairs"] = std::move(pairs);
    res["pass"] = rep.pass;
    if (!rep.failure_reason.empty()) res["failure_reason"] = rep.failure_reason;
    j["results"] = std::move(res);
    j["status"] = rep.pass ? "pass" : "fail";
    return CommandResult{std::move(j), rep.pass ? 0 : 2};
}

CommandResult cmd_defect(const RunConfig& config) {
    Json j = report_shell("defect", config);
    FiniteRing ring = build_ring_from(config);
    if (!config.phase_json)
        throw std::invalid_argument("defect requires --phase with a JSON array of element indices");
    Json arr = Json::parse(*config.phase_json);
    if (!arr.is_array()) throw std::invalid_argument("--phase must be a JSON array");
    std::vector<std::uint64_t> table;
    for (const auto& v : arr) table.push_back(v.get<std::uint64_t>());
    AdditiveDomain domain = AdditiveDomain::ring_power(ring, config.n);
    PhaseFunction phi(domain, ring, std::move(table));
    DefectReport rep = defect_invariants(phi, config.tensor_index, config.cap_degree);

    Json res;
    res["domain_size"] = domain.size();
    res["additive_degree"] = rep.degree;
    res["literal_min_index"] = rep.literal_min;
    res["additive"] = rep.additive;
    res["constant"] = rep.constant;
    res["tensor_index"] = rep.tensor_index;
    Json tensor = Json::array();
    for (std::uint64_t v : rep.tensor_values)
        tensor.push_back(Json{{"index", v}, {"element", ring.element_name(v)}});
    res["defect_tensor"] = std::move(tensor);
    res["additive_convention_flag"] = rep.additive_convention_flag;
    j["results"] = std::move(res);
    j["status"] = "ok";
    return CommandResult{std::move(j), 0};
}

CommandResult cmd_filtration(const RunConfig& config) {
    Json j = report_shell("filtration", config);
    FiniteRing ring = build_ring_from(config);
    AdditiveCharacter eps = pick_character(ring, config);
    Pairing beta = pick_pairing(ring, config);
    HeisenbergGroup group(ring, config.n, beta, eps);
    Representation rep = select_model(
        group, config.models.empty() ? "schrodinger" : config.models.front(), config.seed);

    GradedGeneratorSet gens;
    if (config.gens_json) {
        Json arr = Json::parse(*config.gens_json);
        if (!arr.is_array()) throw std::invalid_argument("--gens must be a JSON array");
        for (const auto& item : arr) {
            std::size_t degree = item.at(0).get<std::size_t>();
            const Json& spec = item.at(1);
            if (spec.is_string()) {
                std::string name = spec.get<std::string>();
                if (name == "scalar") {
                    gens.entries.push_back(
                        {degree, CycloMatrix::identity(rep.field(), rep.dimension()), "scalar"});
                } else if (name.rfind("M:", 0) == 0 || name.rfind("T:", 0) == 0) {
                    std::vector<std::uint64_t> tuple;
                    std::stringstream ss(name.substr(2));
                    std::string part;
                    while (std::getline(ss, part, ','))
                        tuple.push_back(std::stoull(part));
                    if (tuple.size() != config.n)
                        throw std::invalid_argument("tuple length in '" + name + "' must be n");
                    CycloMatrix m = name[0] == 'M' ? modulation_matrix(group, tuple)
                                                   : translation_matrix(group, tuple);
                    gens.entries.push_back({degree, std::move(m), name});
                } else {
                    throw std::invalid_argument("unknown symbolic operator '" + name + "'");
                }
            } else {
                // Explicit matrix: nested arrays of coefficient strings are not
                // accepted from the CLI; only integers (rational part).
                CycloMatrix m(rep.field(), spec.size(), spec.size());
                for (std::size_t r = 0; r < spec.size(); ++r)
                    for (std::size_t c = 0; c < spec.at(r).size(); ++c)
                        m.set(r, c,
                              rep.field().from_rational(
                                  make_rational(spec.at(r).at(c).get<long>())));
                gens.entries.push_back({degree, std::move(m), "matrix"});
            }
        }
    } else {
        gens = fh_graded_set(rep);
    }

    FiltrationMode mode =
        config.filt_mode == "full" ? FiltrationMode::full_module : FiltrationMode::cyclic;
    std::optional<std::vector<CycloNum>> v;
    if (mode == FiltrationMode::cyclic) {
        std::vector<CycloNum> vec(rep.dimension(), rep.field().zero());
        if (config.cyclic_index >= rep.dimension())
            throw std::invalid_argument("cyclic vector index out of range");
        vec[config.cyclic_index] = rep.field().one();
        v = std::move(vec);
    }
    Filtration filt = induced_filtration(rep, gens, mode, v);
    FiltrationCertificate cert = verify_filtration_theorem(filt, gens);
    auto pieces = graded_pieces(filt);

    Json res;
    res["model"] = rep.label();
    res["mode"] = config.filt_mode;
    res["dimension"] = rep.dimension();
    Json dims = Json::array(), strata = Json::array();
    for (const auto& space : filt.spaces) dims.push_back(space.rows());
    for (const auto& piece : pieces) strata.push_back(piece.dimension);
    res["filtration_dims"] = std::move(dims);
    res["strata_dims"] = std::move(strata);
    res["nesting"] = cert.nesting;
    res["degree_additive"] = cert.degree_additive;
    if (!cert.witness.empty()) res["witness"] = cert.witness;
    std::size_t total = 0;
    for (const auto& piece : pieces) total += piece.dimension;
    res["strata_sum"] = total;
    res["strata_sum_matches"] = total == filt.spaces.back().rows();
    j["results"] = std::move(res);
    bool ok = cert.nesting && cert.degree_additive;
    j["status"] = ok ? "ok" : "fail";
    return CommandResult{std::move(j), ok ? 0 : 2};
}

CommandResult cmd_orbit(const RunConfig& config) {
    Json j = report_shell("orbit", config);
    FiniteRing ring = build_ring_from(config);
    AdditiveCharacter eps = pick_character(ring, config);
    Pairing beta = pick_pairing(ring, config);
    OrbitReport rep = character_orbit(beta, eps);
    Json res;
    res["character"] = eps.exponents();
    res["orbit_size"] = rep.orbit_size;
    res["dual_size"] = rep.dual_size;
    res["full"] = rep.full;
    res["nondegenerate"] = is_nondegenerate(beta, eps);
    j["results"] = std::move(res);
    j["status"] = "ok";
    return CommandResult{std::move(j), 0};
}

namespace {

void render_value(std::ostringstream& out, const Json& value, int indent) {
    std::string pad(indent * 2, ' ');
    if (value.is_object()) {
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out << pad << it.key() << ":\n";
                render_value(out, it.value(), indent + 1);
            } else {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        bool scalar_only = true;
        for (const auto& item : value)
            if (item.is_object() || item.is_array()) scalar_only = false;
        if (scalar_only) {
            out << pad << value.dump() << "\n";
        } else {
            for (const auto& item : value) {
                out << pad << "-\n";
                render_value(out, item, indent + 1);
            }
        }
    } else {
        out << pad << value.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render_value(out, report, 0);
    return out.str();
}

}  // namespace heisenrig
