#include "printing.hpp"

#include <sstream>

#include "cli.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

const std::string data_dir = PICLOC_DATA_DIR;

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    for (auto& a : args)
        if (a.starts_with("@"))
            a = data_dir + "/" + a.substr(1);
    std::ostringstream out, err;
    const int code = picloc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}   // namespace

TEST_CASE("binoid command")
{
    const auto r = run({"binoid", "@x+y=2z.json"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring(R"("torsion": [)"));
    CHECK_THAT(r.out, ContainsSubstring("2"));

    const auto pretty = run({"binoid", "@x+y=2z.json", "--pretty"});
    CHECK(pretty.code == 0);
    CHECK_THAT(pretty.out, ContainsSubstring("Z/2"));

    const auto bad = run({"binoid", "@non-cancellative.txt"});
    CHECK(bad.code == 1);
    CHECK_THAT(bad.err, ContainsSubstring("TorsionDetected"));

    const auto dump = run({"binoid", "@x+y=2z.json", "--dump-cech"});
    CHECK(dump.code == 0);
    CHECK_THAT(dump.err, ContainsSubstring("{z}"));

    const auto two = run({"binoid", "@two-points.txt", "--output", "pretty"});
    CHECK(two.code == 0);
    CHECK_THAT(two.out, ContainsSubstring("Z^2"));
}

TEST_CASE("simplicial commands")
{
    const auto s = run({"stanley-reisner", "@triangle.facets", "--field", "symbolic", "--pretty"});
    CHECK(s.code == 0);
    CHECK_THAT(s.out, ContainsSubstring("Z^3 + K*"));

    const auto q = run({"stanley-reisner", "@triangle.facets", "--field", "q=7", "--pretty"});
    CHECK_THAT(q.out, ContainsSubstring("Z^3 + Z/6"));

    CHECK(run({"simplicial", "@prism.facets"}).code == 0);
    const auto c = run({"crosscheck", "@rp2.facets"});
    CHECK(c.code == 0);
    CHECK_THAT(c.out, ContainsSubstring("both-agree"));

    const auto g = run({"graph", "@triangle.facets"});
    CHECK(g.code == 0);
    CHECK_THAT(g.out, ContainsSubstring(R"("r": 3)"));
    CHECK(run({"graph", "@two-triangles.facets"}).code == 1);
}

TEST_CASE("monomial command")
{
    const auto m = run({"monomial", "@x2.ideal", "--field", "Qbar", "--box", "0:1"});
    CHECK(m.code == 0);
    CHECK_THAT(m.out, ContainsSubstring(R"x("(1,0)")x"));
    CHECK(run({"monomial", "@x2.ideal", "--field", "q=5"}).code == 1);
    CHECK(run({"monomial", "@x2.ideal"}).code == 2);
}

TEST_CASE("input errors exit with code 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate", "@triangle.facets"}).code == 2);
    CHECK(run({"simplicial", "@missing.facets"}).code == 2);
    CHECK(run({"stanley-reisner", "@triangle.facets", "--field", "q=6"}).code == 1);
    CHECK(run({"stanley-reisner", "@triangle.facets", "--field", "bogus"}).code == 2);
    CHECK(run({"simplicial", "@triangle.facets", "--jobs", "0"}).code == 2);
}

TEST_CASE("output does not depend on the job count")
{
    const auto a = run({"crosscheck", "@prism.facets"});
    const auto b = run({"crosscheck", "@prism.facets", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"binoid", "@x+y=2z.json"}).out == run({"binoid", "@x+y=2z.json"}).out);
}
