#include "printing.hpp"

#include "oracles.hpp"
#include "picloc/errors.hpp"
#include "picloc/monomial.hpp"

using namespace picloc;

namespace {

const std::string data_dir = PICLOC_DATA_DIR;

void check_against_hand_oracle(const MonomialIdeal& ideal, const std::string& box)
{
    const auto table = nilpotent_cech_dimensions(ideal, parse_degree_box(box, ideal.variable_count()),
                                                 FieldModel::alg_closed_char0());
    for (const auto& entry : table)
    {
        INFO("degree index " << entry.degree.front());
        const auto expected = oracle::nilpotent_dims_by_hand(ideal.variable_count(), ideal.generators(), entry.degree);
        CHECK(entry.dimensions == expected);
    }
}

}   // namespace

TEST_CASE("monomial ideals minimalize their generators")
{
    const MonomialIdeal i(2, {{2, 1}, {1, 2}, {3, 3}});
    CHECK(i.generators().size() == 2);
    CHECK(i.variables() == std::vector<std::string>{"X1", "X2"});
    CHECK_FALSE(i.is_squarefree());
    CHECK(i.radical() == MonomialIdeal(2, {{1, 1}}));
    CHECK(MonomialIdeal(3, {{1, 1, 1}}).is_squarefree());
    CHECK(MonomialIdeal(2, {{2, 0}, {0, 1}}).nilpotent_variables() == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(MonomialIdeal(2, {{0, 0}}), ParseError);
    CHECK_THROWS_AS(MonomialIdeal(2, {{1}}), ParseError);
    CHECK_THROWS_AS(MonomialIdeal(2, {{-1, 1}}), ParseError);
}

TEST_CASE("reduction complexes")
{
    // (X^2 Y, Y Z): radical (XY, YZ), faces avoid {x,y} and {y,z}.
    const MonomialIdeal i(3, {{2, 1, 0}, {0, 1, 1}}, {"x", "y", "z"});
    const auto k = reduction_complex(i);
    CHECK(k.labels() == std::vector<std::string>{"x", "y", "z"});
    CHECK(k.facets() == std::vector<Face>{{0, 2}, {1}});

    // Nilpotent variables leave the vertex set.
    const auto x2 = reduction_complex(read_ideal_file(data_dir + "/x2.ideal"));
    CHECK(x2.labels() == std::vector<std::string>{"Y"});
    CHECK(x2.facets() == std::vector<Face>{{0}});

    const auto zero = reduction_complex(MonomialIdeal(2, {}));
    CHECK(zero.facets() == std::vector<Face>{{0, 1}});
}

TEST_CASE("degree boxes")
{
    const auto b = parse_degree_box("-2:2", 2);
    CHECK(b.lower == std::vector<long long>{-2, -2});
    CHECK(b.upper == std::vector<long long>{2, 2});
    const auto c = parse_degree_box("0:1,-1:3", 2);
    CHECK(c.lower == std::vector<long long>{0, -1});
    CHECK(c.upper == std::vector<long long>{1, 3});
    CHECK_THROWS_AS(parse_degree_box("2:1", 2), ParseError);
    CHECK_THROWS_AS(parse_degree_box("0:1,0:1,0:1", 2), ParseError);
    CHECK_THROWS_AS(parse_degree_box("a:b", 1), ParseError);
}

TEST_CASE("nilpotent correction for X^2")
{
    const auto ideal = read_ideal_file(data_dir + "/x2.ideal");
    const auto table = nilpotent_cech_dimensions(ideal, parse_degree_box("-3:3", 2), FieldModel::alg_closed_char0());
    CHECK(table.size() == 49);
    for (const auto& e : table)
    {
        const bool expected = e.degree[0] == 1;
        CHECK(e.dimensions[0] == (expected ? 1u : 0u));
        CHECK(e.dimensions[1] == 0u);
    }
    // The nonzero chart is D(Y): X is nilpotent and Y is inverted.
    const std::vector<long long> a{1, -5};
    CHECK(nilpotent_chart_nonzero(ideal, Face{1}, a));
    CHECK_FALSE(nilpotent_chart_nonzero(ideal, Face{0}, a));
    CHECK_FALSE(nilpotent_chart_nonzero(ideal, Face{0, 1}, a));
}

TEST_CASE("nilpotent correction vanishes in the expected cases")
{
    for (const auto& ideal : {MonomialIdeal(3, {{1, 1, 1}}), MonomialIdeal(2, {{1, 1}}), MonomialIdeal(2, {{2, 0}, {1, 1}}),
                              read_ideal_file(data_dir + "/x2y-xy2.ideal")})
    {
        const auto table = nilpotent_cech_dimensions(ideal, parse_degree_box("-2:2", ideal.variable_count()),
                                                     FieldModel::rationals());
        for (const auto& e : table)
            for (auto d : e.dimensions)
                CHECK(d == 0u);
    }
}

TEST_CASE("nilpotent table matches hand localization")
{
    check_against_hand_oracle(read_ideal_file(data_dir + "/x2.ideal"), "-2:2");
    check_against_hand_oracle(read_ideal_file(data_dir + "/x2y-xy2.ideal"), "-2:3");
    check_against_hand_oracle(MonomialIdeal(3, {{2, 0, 0}, {0, 1, 1}}), "-1:2");
    check_against_hand_oracle(MonomialIdeal(3, {{2, 1, 0}, {0, 2, 1}, {1, 0, 3}}), "-1:3");
    check_against_hand_oracle(MonomialIdeal(3, {{1, 2, 0}, {0, 0, 2}}), "-1:2");
}

TEST_CASE("positive characteristic is refused")
{
    const auto ideal = read_ideal_file(data_dir + "/x2.ideal");
    CHECK_THROWS_AS(nilpotent_cech_dimensions(ideal, parse_degree_box("0:1", 2), FieldModel::finite_field(5)),
                    CharPUnsupported);
    CHECK_THROWS_AS(nilpotent_cech_dimensions(ideal, parse_degree_box("0:1", 2), FieldModel::alg_closed_char_p(3)),
                    CharPUnsupported);
}

TEST_CASE("nonreduced report")
{
    const auto r = nonreduced_report(read_ideal_file(data_dir + "/x2.ideal"), FieldModel::symbolic(),
                                     parse_degree_box("0:1", 2));
    CHECK(r.removed_variables == std::vector<std::string>{"X"});
    CHECK(r.nilpotent.size() == 4);
    REQUIRE(r.reduced.degree(0) != nullptr);
    CHECK(r.reduced.degree(0)->combinatorial == FgAbelianGroup::free(1));
}

TEST_CASE("ideal files")
{
    const auto i = parse_ideal_text("variables: a b\n# comment\n1 2\n2 1\n");
    CHECK(i.variables() == std::vector<std::string>{"a", "b"});
    CHECK(i.generators().size() == 2);
    CHECK_THROWS_AS(parse_ideal_text("1 x\n"), ParseError);
    CHECK_THROWS_AS(read_ideal_file(data_dir + "/missing.ideal"), ParseError);
}
