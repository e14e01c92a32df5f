#include "printing.hpp"

#include <random>

#include "oracles.hpp"
#include "picloc/errors.hpp"
#include "picloc/picard.hpp"

using namespace picloc;

namespace {

const std::string data_dir = PICLOC_DATA_DIR;

SimplicialComplex facets(const std::string& name)
{
    return read_facet_file(data_dir + "/" + name);
}

// The cone over k with apex "o".
SimplicialComplex cone(const SimplicialComplex& k)
{
    std::vector<std::vector<std::string>> fs;
    for (const auto& f : k.facets())
    {
        std::vector<std::string> labels{"o"};
        for (auto v : f)
            labels.push_back(k.label(v));
        fs.push_back(labels);
    }
    return SimplicialComplex::from_facets({}, fs);
}

FgAbelianGroup combinatorial(const CohomologyReport& r, int j)
{
    const auto* d = r.degree(j);
    return d ? d->combinatorial : FgAbelianGroup{};
}

}   // namespace

TEST_CASE("hollow triangle")
{
    const auto k = facets("triangle.facets");
    const auto direct = picloc_simplicial_direct(k);
    CHECK(direct.provenance == Provenance::Direct);
    REQUIRE(direct.degrees.size() == 2);
    CHECK(combinatorial(direct, 0).is_trivial());
    CHECK(combinatorial(direct, 1) == FgAbelianGroup::free(3));
    REQUIRE(direct.degree(1)->per_vertex.size() == 3);
    for (const auto& [label, g] : direct.degree(1)->per_vertex)
        CHECK(g == FgAbelianGroup::free(1));
    CHECK(direct.degree(5) == nullptr);

    const auto both = crosscheck_simplicial(k);
    CHECK(both.provenance == Provenance::BothAgree);
    CHECK(to_string(both.provenance) == "both-agree");
}

TEST_CASE("regressions with trivial combinatorial Picard group")
{
    const auto two = facets("two-triangles.facets");
    const auto r2 = stanley_reisner_cohomology(two, FieldModel::symbolic());
    CHECK(combinatorial(r2, 1).is_trivial());
    CHECK(r2.degree(1)->field->is_trivial());

    const auto prism = facets("prism.facets");
    const auto rp = stanley_reisner_cohomology(prism, FieldModel::symbolic());
    CHECK(combinatorial(rp, 1).is_trivial());
    const GroupValue& f = *rp.degree(1)->field;
    CHECK(f.kstar_copies == 1);
    CHECK(f.concrete.is_trivial());
    CHECK(f.mu.empty());
    CHECK(f.ext.empty());
    CHECK(crosscheck_simplicial(prism).provenance == Provenance::BothAgree);
}

TEST_CASE("Stanley-Reisner triangle")
{
    const auto k = facets("triangle.facets");
    const auto sym = stanley_reisner_cohomology(k, FieldModel::symbolic());
    const auto h1 = total_value(*sym.degree(1));
    CHECK(h1.concrete == FgAbelianGroup::free(3));
    CHECK(h1.kstar_copies == 1);
    CHECK(h1.to_string() == "Z^3 + K*");
    CHECK(total_value(*sym.degree(0)).to_string() == "K*");

    for (Integer q : {2, 5, 7, 9})
    {
        const auto fq = stanley_reisner_cohomology(k, FieldModel::finite_field(q));
        const auto v = total_value(*fq.degree(1));
        CHECK(v.is_concrete());
        CHECK(v.concrete == FgAbelianGroup(3, {q - 1}));
    }
}

TEST_CASE("real projective plane has torsion in the field part")
{
    const auto k = facets("rp2.facets");
    const auto r = stanley_reisner_cohomology(k, FieldModel::symbolic());
    CHECK(combinatorial(r, 1).is_trivial());
    CHECK(r.degree(1)->field->mu == std::vector<Integer>{2});
    CHECK(combinatorial(r, 2) == FgAbelianGroup::free(6));
    CHECK(r.degree(2)->field->ext == std::vector<Integer>{2});
    CHECK(crosscheck_simplicial(k).degrees == picloc_simplicial_formula(k).degrees);
}

TEST_CASE("cone over the real projective plane has combinatorial torsion")
{
    const auto k = cone(facets("rp2.facets"));
    CHECK(k.dim() == 3);
    const auto r = crosscheck_simplicial(k);
    CHECK(combinatorial(r, 3) == FgAbelianGroup::cyclic(2));
    const auto& split = r.degree(3)->per_vertex;
    REQUIRE(split.front().first == "o");
    CHECK(split.front().second == FgAbelianGroup::cyclic(2));
    for (std::size_t v = 1; v < split.size(); ++v)
        CHECK(split[v].second.is_trivial());
}

TEST_CASE("direct and formula pipelines agree on random complexes")
{
    std::mt19937 rng(606);
    for (int i = 0; i < 40; ++i)
    {
        const auto k = oracle::random_complex(2 + i % 5, rng, 6);
        const auto direct = picloc_simplicial_direct(k);
        const auto formula = picloc_simplicial_formula(k);
        REQUIRE(direct.degrees.size() == formula.degrees.size());
        for (std::size_t j = 0; j < direct.degrees.size(); ++j)
        {
            CHECK(direct.degrees[j].combinatorial == formula.degrees[j].combinatorial);
            CHECK(direct.degrees[j].per_vertex == formula.degrees[j].per_vertex);
            FgAbelianGroup sum;
            for (const auto& [label, g] : direct.degrees[j].per_vertex)
                sum = sum + g;
            CHECK(sum == direct.degrees[j].combinatorial);
        }
        // Degree 0 counts isolated vertices; degrees 0 and 1 are free.
        CHECK(combinatorial(direct, 0) == FgAbelianGroup::free(k.isolated_vertex_count()));
        CHECK(combinatorial(direct, 1).is_free());
    }
}

TEST_CASE("integral binoids")
{
    const auto x2z = read_binoid_file(data_dir + "/x+y=2z.json");
    const auto r = picloc_integral_binoid(x2z);
    CHECK(combinatorial(r, 1) == FgAbelianGroup::cyclic(2));
    CHECK(combinatorial(r, 0).is_trivial());

    const auto neil = picloc_integral_binoid(read_binoid_file(data_dir + "/neil.txt"));
    CHECK(combinatorial(neil, 0) == FgAbelianGroup::free(1));
    CHECK(combinatorial(neil, 1).is_trivial());

    const auto plane = picloc_integral_binoid(parse_binoid_text("generators: x y\n"));
    CHECK(combinatorial(plane, 0).is_trivial());
    CHECK(combinatorial(plane, 1).is_trivial());

    const auto group = picloc_integral_binoid(parse_binoid_text("generators: x y\nx + y = 0\n"));
    REQUIRE(group.degrees.size() == 1);
    CHECK(group.degrees[0].combinatorial.is_trivial());

    CHECK_THROWS_AS(picloc_integral_binoid(read_binoid_file(data_dir + "/non-cancellative.txt")), TorsionDetected);
}

TEST_CASE("graph fast path")
{
    CHECK(graph_fast_path(facets("triangle.facets")) == GraphCounts{0, 3});
    CHECK(graph_fast_path(facets("path.facets")) == GraphCounts{0, 2});
    CHECK(graph_fast_path(SimplicialComplex::from_facets({}, {{"a"}, {"b"}, {"c", "d"}})) == GraphCounts{2, 0});
    CHECK_THROWS_AS(graph_fast_path(facets("two-triangles.facets")), NotAGraph);
}

TEST_CASE("graded rank sequence of connected graphs")
{
    const auto t = graph_graded_report(facets("triangle.facets"));
    CHECK(t.units == 1);
    CHECK(t.edges == 3);
    CHECK(t.middle == 3);
    CHECK(t.cyclomatic == 1);
    CHECK(t.identity_holds);

    const auto tree = graph_graded_report(facets("path.facets"));
    CHECK(std::tuple(tree.units, tree.edges, tree.middle, tree.cyclomatic) == std::tuple(1u, 3u, 2LL, 0u));

    const auto edge = graph_graded_report(SimplicialComplex::from_facets({}, {{"a", "b"}}));
    CHECK(std::tuple(edge.units, edge.edges, edge.middle, edge.cyclomatic) == std::tuple(1u, 1u, 0LL, 0u));

    CHECK_THROWS_AS(graph_graded_report(SimplicialComplex::from_facets({}, {{"a", "b"}, {"c", "d"}})), Disconnected);
    CHECK_THROWS_AS(graph_graded_report(facets("two-triangles.facets")), NotAGraph);
}

TEST_CASE("graph fast path matches the general formula")
{
    std::mt19937 rng(77);
    for (int i = 0; i < 40; ++i)
    {
        const auto k = oracle::random_graph(2 + i % 7, 0.4, rng);
        const auto counts = graph_fast_path(k);
        const auto r = picloc_simplicial_formula(k);
        CHECK(counts.isolated == combinatorial(r, 0).free_rank());
        CHECK(counts.r == combinatorial(r, 1).free_rank());
    }
}
