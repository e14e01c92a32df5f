#include "picloc/picard.hpp"

#include <algorithm>

#include "picloc/cech.hpp"
#include "picloc/errors.hpp"

namespace picloc {

std::string to_string(Provenance p)
{
    switch (p)
    {
        case Provenance::Direct: return "direct";
        case Provenance::Formula: return "formula";
        case Provenance::BothAgree: return "both-agree";
    }
    return "?";
}

GroupValue total_value(const DegreeReport& d)
{
    GroupValue v = d.field.value_or(GroupValue{});
    v.concrete = d.combinatorial + v.concrete;
    return v;
}

const DegreeReport* CohomologyReport::degree(int j) const
{
    for (const auto& d : degrees)
        if (d.j == j)
            return &d;
    return nullptr;
}

namespace {

const FgAbelianGroup& group_at(const std::vector<FgAbelianGroup>& groups, int j)
{
    static const FgAbelianGroup trivial;
    return j >= 0 && static_cast<std::size_t>(j) < groups.size() ? groups[static_cast<std::size_t>(j)] : trivial;
}

std::vector<std::size_t> used_vertices(const SimplicialComplex& k)
{
    std::vector<std::size_t> out;
    for (const auto& f : k.faces_of_size(1))
        out.push_back(f[0]);
    return out;
}

void require_nonvoid(const SimplicialComplex& k)
{
    if (k.is_void())
        throw VoidComplex("the void complex has no simplicial binoid spectrum");
}

std::string describe(const FgAbelianGroup& g)
{
    return g.to_string();
}

}   // namespace

CohomologyReport picloc_simplicial_direct(const SimplicialComplex& k)
{
    require_nonvoid(k);
    CohomologyReport report;
    report.provenance = Provenance::Direct;
    const auto total = cech_cohomology(build_cech_complex(simplicial_unit_model(k)));

    std::vector<std::pair<std::string, std::vector<FgAbelianGroup>>> split;
    for (std::size_t v : used_vertices(k))
        split.emplace_back(k.label(v), cech_cohomology(build_cech_complex(simplicial_vertex_model(k, v))));

    for (int j = 0; j <= k.dim(); ++j)
    {
        DegreeReport d;
        d.j = j;
        d.combinatorial = group_at(total, j);
        for (const auto& [label, groups] : split)
            d.per_vertex.emplace_back(label, group_at(groups, j));
        report.degrees.push_back(std::move(d));
    }
    return report;
}

CohomologyReport picloc_simplicial_formula(const SimplicialComplex& k)
{
    require_nonvoid(k);
    CohomologyReport report;
    report.provenance = Provenance::Formula;

    std::vector<std::pair<std::string, GradedGroups>> links;
    for (std::size_t v : used_vertices(k))
        links.emplace_back(k.label(v), cohomology_Z(link(k, Face{v}), true));

    for (int j = 0; j <= k.dim(); ++j)
    {
        DegreeReport d;
        d.j = j;
        for (const auto& [label, h] : links)
        {
            d.per_vertex.emplace_back(label, h.at(j - 1));
            d.combinatorial = d.combinatorial + h.at(j - 1);
        }
        report.degrees.push_back(std::move(d));
    }
    return report;
}

CohomologyReport crosscheck_simplicial(const SimplicialComplex& k)
{
    CohomologyReport direct = picloc_simplicial_direct(k);
    const CohomologyReport formula = picloc_simplicial_formula(k);
    if (direct.degrees.size() != formula.degrees.size())
        throw CrossCheckMismatch("the pipelines report different degree ranges");
    for (std::size_t i = 0; i < direct.degrees.size(); ++i)
    {
        const auto& a = direct.degrees[i];
        const auto& b = formula.degrees[i];
        if (a.combinatorial != b.combinatorial)
            throw CrossCheckMismatch("H^" + std::to_string(a.j) + ": direct " + describe(a.combinatorial) +
                                     " vs formula " + describe(b.combinatorial));
        if (a.per_vertex != b.per_vertex)
            for (std::size_t v = 0; v < a.per_vertex.size(); ++v)
                if (a.per_vertex[v] != b.per_vertex[v])
                    throw CrossCheckMismatch("H^" + std::to_string(a.j) + " at vertex " + a.per_vertex[v].first +
                                             ": direct " + describe(a.per_vertex[v].second) + " vs formula " +
                                             describe(b.per_vertex[v].second));
    }
    direct.provenance = Provenance::BothAgree;
    return direct;
}

CohomologyReport picloc_integral_binoid(const BinoidPresentation& p)
{
    const DifferenceGroup gamma = difference_group(p);
    const auto units = unit_generators(gamma);
    std::vector<std::size_t> cover;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!std::binary_search(units.begin(), units.end(), i))
            cover.push_back(i);

    CohomologyReport report;
    report.provenance = Provenance::Direct;
    if (cover.empty())
    {
        report.degrees.push_back(DegreeReport{0, FgAbelianGroup{}, {}, std::nullopt});
        return report;
    }
    const auto groups = cech_cohomology(build_cech_complex(integral_binoid_model(gamma, cover)));
    for (std::size_t j = 0; j < groups.size(); ++j)
        report.degrees.push_back(DegreeReport{static_cast<int>(j), groups[j], {}, std::nullopt});
    return report;
}

CohomologyReport stanley_reisner_cohomology(const SimplicialComplex& k, const FieldModel& model)
{
    CohomologyReport report = picloc_simplicial_formula(k);
    const auto field = cohomology_with_coefficients(k, model);
    for (auto& d : report.degrees)
        d.field = static_cast<std::size_t>(d.j) < field.size() ? field[static_cast<std::size_t>(d.j)] : GroupValue{};
    return report;
}

GraphCounts graph_fast_path(const SimplicialComplex& k)
{
    if (k.dim() > 1)
        throw NotAGraph("the complex has dimension " + std::to_string(k.dim()));
    GraphCounts counts;
    const auto deg = k.vertex_degrees();
    for (std::size_t v : used_vertices(k))
    {
        if (deg[v] == 0)
            ++counts.isolated;
        else
            counts.r += deg[v] - 1;
    }
    return counts;
}

GraphRankSequence graph_graded_report(const SimplicialComplex& k)
{
    if (k.dim() != 1)
        throw NotAGraph("expected a graph of dimension 1, got dimension " + std::to_string(k.dim()));
    if (k.connected_components() != 1)
        throw Disconnected("the graph has " + std::to_string(k.connected_components()) + " components");
    GraphRankSequence seq;
    const long long e = static_cast<long long>(k.faces_of_size(2).size());
    const long long v = static_cast<long long>(k.faces_of_size(1).size());
    seq.edges = static_cast<std::size_t>(e);
    seq.middle = 2 * e - v;
    seq.cyclomatic = cohomology_Z(k, false).at(1).free_rank();
    const long long alternating = 1 - e + seq.middle - static_cast<long long>(seq.cyclomatic);
    seq.identity_holds = alternating == 0 && static_cast<long long>(seq.cyclomatic) == e - v + 1;
    return seq;
}

}   // namespace picloc
