#pragma once

#include "heisenrig/defect.hpp"
#include "heisenrig/filtration.hpp"
#include "heisenrig/homspace.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace heisenrig {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "heisenrig-report/1";

/// One parsed CLI invocation. Reports echo this back verbatim so identical
/// configurations reproduce byte-identical output.
struct RunConfig {
    std::string ring_text;
    std::size_t n = 1;
    std::vector<std::uint64_t> pairing;                   // empty = identity matrix
    std::optional<std::vector<std::uint64_t>> character;  // nullopt = auto
    std::vector<std::string> models = {"schrodinger", "induced", "fourier", "conjugated"};
    std::string format = "text";  // text | json
    std::uint64_t seed = 12345;
    std::uint64_t cap_elems = 65536;
    std::uint64_t cap_pairs = 4096;
    std::size_t cap_degree = 8;
    bool show_table = false;                   // ring: include the element table
    std::optional<std::string> phase_json;     // defect: JSON array of element indices
    std::optional<std::size_t> tensor_index;   // defect: override the tensor level
    std::optional<std::string> gens_json;      // filtration: graded generator set
    std::string filt_mode = "cyclic";          // cyclic | full
    std::uint64_t cyclic_index = 0;            // cyclic vector basis index
};

struct CommandResult {
    Json report;
    int exit_code = 0;
};

CommandResult cmd_ring(const RunConfig& config);
CommandResult cmd_frobenius(const RunConfig& config);
CommandResult cmd_svn(const RunConfig& config);
CommandResult cmd_defect(const RunConfig& config);
CommandResult cmd_filtration(const RunConfig& config);
CommandResult cmd_orbit(const RunConfig& config);

/// Matrices serialize as nested arrays of coefficient-vector strings
/// "c0/d0,c1/d1,...".
Json matrix_to_json(const CycloMatrix& m);

/// Plain-text rendering of a report.
std::string render_text(const Json& report);

}  // namespace heisenrig
