#include "heisenrig/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoull(part));
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
}

void emit(const heisenrig::CommandResult& result, const heisenrig::RunConfig& config) {
    if (config.format == "json")
        std::cout << result.report.dump(2) << "\n";
    else
        std::cout << heisenrig::render_text(result.report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for Heisenberg groups over finite commutative rings"};
    app.require_subcommand(1);

    heisenrig::RunConfig config;
    std::string pairing_text, char_text = "auto", models_text, phase_text, gens_text;

    app.add_option("--ring", config.ring_text, "ring spec, e.g. Z/4 or F2[t]/(t^2)")->required();
    app.add_option("--n", config.n, "module rank n");
    app.add_option("--pairing", pairing_text, "comma-separated n*n matrix of element indices");
    app.add_option("--char", char_text, "'auto' or comma-separated exponent tuple");
    app.add_option("--models", models_text,
                   "comma list from schrodinger,induced,fourier,conjugated[:seed]");
    app.add_option("--format", config.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", config.seed, "seed for the conjugated model");
    app.add_option("--cap-elems", config.cap_elems, "element/enumeration cap");
    app.add_option("--cap-pairs", config.cap_pairs, "exhaustive pair-check cap");
    app.add_option("--cap-degree", config.cap_degree, "defect degree search cap");

    CLI::App* ring_cmd = app.add_subcommand("ring", "parse and build the ring");
    ring_cmd->add_flag("--table", config.show_table, "include the full element tables");
    CLI::App* frob_cmd = app.add_subcommand("frobenius", "generating-character search");
    CLI::App* svn_cmd = app.add_subcommand("svn", "Stone-von-Neumann uniqueness pipeline");
    CLI::App* defect_cmd = app.add_subcommand("defect", "difference calculus on a phase table");
    defect_cmd->add_option("--phase", phase_text, "JSON array of ring element indices")
        ->required();
    std::int64_t tensor_index = -1;
    defect_cmd->add_option("--tensor-index", tensor_index,
                           "evaluate the defect tensor at this level instead of the degree");
    CLI::App* filt_cmd = app.add_subcommand("filtration", "induced filtration and strata");
    filt_cmd->add_option("--gens", gens_text,
                         "JSON list of [degree, op] pairs; op is 'scalar', 'M:tuple', 'T:tuple' "
                         "or an integer matrix");
    filt_cmd->add_option("--mode", config.filt_mode, "cyclic | full")
        ->check(CLI::IsMember({"cyclic", "full"}));
    filt_cmd->add_option("--vector", config.cyclic_index, "cyclic vector basis index");
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "character orbit analysis");

    CLI11_PARSE(app, argc, argv);

    if (const char* env_cap = std::getenv("HEISENRIG_CAP_ELEMS"))
        config.cap_elems = std::stoull(env_cap);
    if (!pairing_text.empty()) config.pairing = parse_uint_list(pairing_text);
    if (char_text != "auto") config.character = parse_uint_list(char_text);
    if (!models_text.empty()) config.models = parse_string_list(models_text);
    if (!phase_text.empty()) config.phase_json = phase_text;
    if (!gens_text.empty()) config.gens_json = gens_text;
    if (tensor_index >= 0) config.tensor_index = static_cast<std::size_t>(tensor_index);

    try {
        heisenrig::CommandResult result;
        if (ring_cmd->parsed())
            result = heisenrig::cmd_ring(config);
        else if (frob_cmd->parsed())
            result = heisenrig::cmd_frobenius(config);
        else if (svn_cmd->parsed())
            result = heisenrig::cmd_svn(config);
        else if (defect_cmd->parsed())
            result = heisenrig::cmd_defect(config);
        else if (filt_cmd->parsed())
            result = heisenrig::cmd_filtration(config);
        else if (orbit_cmd->parsed())
            result = heisenrig::cmd_orbit(config);
        emit(result, config);
        return result.exit_code;
    } catch (const heisenrig::ParseError& e) {
        std::cerr << "heisenrig: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "heisenrig: error: " << e.what() << "\n";
        return 1;
    }
}
