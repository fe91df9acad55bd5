#ifndef MORSEGRAD_IO_HPP
#define MORSEGRAD_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "morsegrad/analysis.hpp"

namespace morsegrad {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result of reading the line-oriented input format:
//   params <n>
//   vertex <id> <g1> ... <gn>
//   simplex <v1> ... <vk>            (grade = componentwise max over vertices)
//   grade <v1> ... <vk> <g1> ... <gn> (explicit-grade mode)
//   closure                           (add missing faces)
// Either all cells come from vertex/simplex lines (vertex-function mode,
// suitable for gradient construction) or all from grade lines (explicit mode,
// invariants only). The filtration is fully validated.
struct ParsedInput {
    Filtration filtration;
    bool explicit_mode = false;
    std::vector<int> tiebreak_axes; // axes perturbed by --tiebreak
};

ParsedInput parse_input(std::istream& in, bool allow_tiebreak = false);
ParsedInput parse_input_file(const std::string& path, bool allow_tiebreak = false);

// Cell-complex text format used by the reduce subcommand:
//   params <n>
//   cell <id> <dim> <g1> ... <gn>
//   face <cell-id> <facet-id> 1
std::string format_cell_complex(const LefschetzComplex& M, const std::vector<Grade>& grades,
                                int params);

std::uint64_t fnv1a_hash(const std::string& data);

// JSON report sections; every value is an integer or string, so byte-identical
// output across runs and thread counts comes for free.
nlohmann::json grade_json(const Grade& u);
nlohmann::json gradient_json(const Filtration& F, const DiscreteGradient& V);
nlohmann::json morse_numbers_json(const MorseNumbers& m);
nlohmann::json betti_tables_json(const BettiTables& t);
nlohmann::json persistence_pairs_json(const PersistencePairs& p, const SimplicialComplex* K);
nlohmann::json perfectness_json(const PerfectnessReport& r);
nlohmann::json inequalities_json(const InequalityReport& r);

// Assembles the single report document. Sections not computed are omitted.
std::string emit_report(const nlohmann::json& meta, const nlohmann::json& sections);

} // namespace morsegrad

#endif
