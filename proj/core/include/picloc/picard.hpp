#ifndef PICLOC_PICARD_HPP
#define PICLOC_PICARD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picloc/abelian.hpp"
#include "picloc/binoid.hpp"
#include "picloc/field_model.hpp"
#include "picloc/simplicial.hpp"

namespace picloc {

enum class Provenance
{
    Direct,
    Formula,
    BothAgree,
};

std::string to_string(Provenance p);   // "direct", "formula", "both-agree"

struct DegreeReport
{
    int j = 0;
    FgAbelianGroup combinatorial;
    std::vector<std::pair<std::string, FgAbelianGroup>> per_vertex;   // vertex order
    std::optional<GroupValue> field;

    friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

// combinatorial + field as one value.
GroupValue total_value(const DegreeReport& d);

/**
 * Cohomology of the sheaf of units on a punctured spectrum, degree by degree.
 * The full answer in degree j is combinatorial + field.
 */
struct CohomologyReport
{
    std::vector<DegreeReport> degrees;
    Provenance provenance = Provenance::Direct;

    // Degree j, or nullptr when it is not in the report (and hence zero).
    const DegreeReport* degree(int j) const;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

/**
 * Cech cohomology of the unit sheaf of the simplicial binoid of K on the
 * coordinate cover, in degrees 0 .. dim K, with the per-vertex summands.
 */
CohomologyReport picloc_simplicial_direct(const SimplicialComplex& k);

// The same groups from the links: H^j = sum over v of reduced H^{j-1}(lk v).
CohomologyReport picloc_simplicial_formula(const SimplicialComplex& k);

// Runs both pipelines; throws CrossCheckMismatch if any degree or vertex differs.
CohomologyReport crosscheck_simplicial(const SimplicialComplex& k);

/**
 * Cech cohomology of the unit sheaf of an integral, cancellative,
 * torsion-free binoid, covered by its non-unit generators. Degree 1 is the
 * local Picard group.
 */
CohomologyReport picloc_integral_binoid(const BinoidPresentation& p);

/**
 * Unit-sheaf cohomology of the punctured spectrum of K[K]: combinatorial
 * part from the link formula, field part H^j(K, K*) from the field model.
 */
CohomologyReport stanley_reisner_cohomology(const SimplicialComplex& k, const FieldModel& model);

struct GraphCounts
{
    std::size_t isolated = 0;   // s
    std::size_t r = 0;          // sum of deg(v) - 1 over non-isolated vertices

    friend bool operator==(const GraphCounts&, const GraphCounts&) = default;
};

// Throws NotAGraph if dim K > 1.
GraphCounts graph_fast_path(const SimplicialComplex& k);

/**
 * Ranks of 0 -> Z -> Z^|E| -> Z^(2|E|-|V|) -> H^1(K, Z) -> 0 for a connected
 * graph. `identity_holds` records that the cyclomatic number computed from
 * cohomology equals |E| - |V| + 1 and the alternating sum vanishes.
 */
struct GraphRankSequence
{
    std::size_t units = 1;
    std::size_t edges = 0;
    long long middle = 0;
    std::size_t cyclomatic = 0;
    bool identity_holds = false;
};

// Throws NotAGraph unless dim K = 1, Disconnected unless connected.
GraphRankSequence graph_graded_report(const SimplicialComplex& k);

}   // namespace picloc

#endif
