#ifndef PICLOC_REPORT_JSON_HPP
#define PICLOC_REPORT_JSON_HPP

#include <string>
#include <string_view>

#include "picloc/monomial.hpp"
#include "picloc/picard.hpp"

namespace picloc {

/**
 * JSON form of a report:
 *   {"degrees": [{"j", "free_rank", "torsion", "combinatorial", "per_vertex", "field"}], "provenance"}
 * Top-level free_rank/torsion describe the concrete part of combinatorial + field.
 * Integers that do not fit in 64 bits are written as strings.
 * `indent` < 0 gives compact output.
 */
std::string report_to_json(const CohomologyReport& report, int indent = -1);

// Inverse of report_to_json. Throws ParseError.
CohomologyReport report_from_json(std::string_view text);

// {"reduced": report, "removed_variables": [...], "nilpotent": {"(a1,...,an)": [dim H^0, ...]}}
std::string nonreduced_to_json(const NonreducedReport& report, int indent = -1);

// Aligned text tables.
std::string report_to_table(const CohomologyReport& report);
std::string nonreduced_to_table(const NonreducedReport& report);

}   // namespace picloc

#endif
