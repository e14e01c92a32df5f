#include "printing.hpp"

#include <random>

#include "oracles.hpp"
#include "picloc/abelian.hpp"
#include "picloc/errors.hpp"

using namespace picloc;

namespace {

bool is_diagonal_chain(const IntMatrix& d)
{
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0)
                return false;
    Integer prev = 1;
    bool seen_zero = false;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    {
        if (d(i, i) < 0)
            return false;
        if (d(i, i) == 0)
        {
            seen_zero = true;
            continue;
        }
        if (seen_zero || d(i, i) % prev != 0)
            return false;
        prev = d(i, i);
    }
    return true;
}

}   // namespace

TEST_CASE("smith normal form of small matrices")
{
    SECTION("zero matrix")
    {
        auto s = smith_normal_form(IntMatrix(2, 3));
        CHECK(s.diagonal.is_zero());
        CHECK(s.left == IntMatrix::identity(2));
        CHECK(s.right == IntMatrix::identity(3));
        CHECK(s.rank == 0);
    }
    SECTION("rows (1,0), (1,2)")
    {
        auto s = smith_normal_form(IntMatrix::from_rows({{1, 0}, {1, 2}}));
        CHECK(s.diagonal == IntMatrix::from_rows({{1, 0}, {0, 2}}));
    }
    SECTION("diag(6,4) becomes diag(2,12)")
    {
        auto s = smith_normal_form(IntMatrix::from_rows({{6, 0}, {0, 4}}));
        CHECK(s.diagonal == IntMatrix::from_rows({{2, 0}, {0, 12}}));
    }
    SECTION("empty shapes")
    {
        CHECK(smith_normal_form(IntMatrix(0, 3)).right == IntMatrix::identity(3));
        CHECK(smith_normal_form(IntMatrix(3, 0)).left == IntMatrix::identity(3));
    }
}

TEST_CASE("smith normal form properties on random matrices")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 150; ++trial)
    {
        const IntMatrix a = oracle::random_matrix(dim(rng), dim(rng), rng, trial % 3 == 0 ? 30 : 6);
        const SmithForm s = smith_normal_form(a);
        INFO(a.dump());
        REQUIRE(s.left * a * s.right == s.diagonal);
        CHECK(boost::multiprecision::abs(oracle::bareiss_det(s.left)) == 1);
        CHECK(boost::multiprecision::abs(oracle::bareiss_det(s.right)) == 1);
        CHECK(is_diagonal_chain(s.diagonal));
        CHECK(s.rank == oracle::naive_rank(a));
        CHECK(rank(a) == s.rank);
        CHECK(cokernel(a).invariant_factors() == oracle::invariant_factors(a));
    }
}

TEST_CASE("smith normal form is deterministic")
{
    const IntMatrix a = IntMatrix::from_rows({{4, 6, 2}, {6, 9, 3}, {2, 3, 8}});
    CHECK(smith_normal_form(a).left == smith_normal_form(a).left);
    CHECK(smith_normal_form(a).right == smith_normal_form(a).right);
}

TEST_CASE("cokernel")
{
    CHECK(cokernel(IntMatrix::from_rows({{1, 1}, {0, 2}})) == FgAbelianGroup::cyclic(2));
    CHECK(cokernel(IntMatrix(3, 0)) == FgAbelianGroup::free(3));
    const auto g = cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(g.invariant_factors() == std::vector<Integer>{6});
    CHECK(g.to_string() == "Z/6");
}

TEST_CASE("cokernel is invariant under unimodular changes of basis")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial)
    {
        const IntMatrix a = oracle::random_matrix(1 + trial % 4, 1 + trial % 5, rng);
        auto [u, u_inv] = oracle::random_unimodular(a.rows(), rng);
        auto [v, v_inv] = oracle::random_unimodular(a.cols(), rng);
        REQUIRE(u * u_inv == IntMatrix::identity(a.rows()));
        CHECK(cokernel(u * a * v) == cokernel(a));
    }
}

TEST_CASE("finitely generated abelian groups normalize")
{
    CHECK(FgAbelianGroup().to_string() == "0");
    CHECK(FgAbelianGroup(1).to_string() == "Z");
    CHECK(FgAbelianGroup(3, {2, 6}).to_string() == "Z^3 + Z/2 + Z/6");
    CHECK(FgAbelianGroup(0, {4, 6}).invariant_factors() == std::vector<Integer>{2, 12});
    CHECK(FgAbelianGroup(0, {1, 1}).is_trivial());
    CHECK(FgAbelianGroup(0, {0, 5}) == FgAbelianGroup(1, {5}));
    CHECK(FgAbelianGroup(1, {2}) + FgAbelianGroup(0, {3}) == FgAbelianGroup(1, {6}));
}

TEST_CASE("hermite normal form and subgroups")
{
    const IntMatrix h = hermite_normal_form(IntMatrix::from_rows({{2, 4}, {3, 5}, {1, 1}}));
    CHECK(h == IntMatrix::from_rows({{1, 1}, {0, 2}}));

    const Subgroup s = Subgroup::generated_by(2, IntMatrix::from_rows({{1, 1}, {0, 2}}));
    const Subgroup t = Subgroup::generated_by(2, IntMatrix::from_rows({{1, -1}, {2, 0}}));
    CHECK(s == t);
    CHECK(s.contains(std::vector<Integer>{3, 1}));
    CHECK_FALSE(s.contains(std::vector<Integer>{1, 0}));
    CHECK(Subgroup::full(2).contains(s));
    CHECK_FALSE(s.contains(Subgroup::full(2)));
    CHECK(s.inclusion_into(Subgroup::full(2)) == s.basis().transpose());
    CHECK_THROWS_AS(Subgroup::full(2).inclusion_into(s), NotInLattice);
}

TEST_CASE("kernel and image bases")
{
    CHECK(kernel_basis(IntMatrix::identity(3)).rank() == 0);
    CHECK(image_basis(IntMatrix::identity(3)) == Subgroup::full(3));
    CHECK(kernel_basis(IntMatrix::from_rows({{1, -1}})).basis() == IntMatrix::from_rows({{1, 1}}));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial)
    {
        const IntMatrix a = oracle::random_matrix(1 + trial % 3, 2 + trial % 4, rng, 5);
        const Subgroup k = kernel_basis(a);
        CHECK(k.rank() == a.cols() - oracle::naive_rank(a));
        for (std::size_t i = 0; i < k.rank(); ++i)
        {
            auto image = a.apply(k.basis().row(i));
            CHECK(std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; }));
        }
        // The image basis spans the column lattice: every column has
        // coordinates, and both lattices have the same covolume.
        const Subgroup im = image_basis(a);
        for (std::size_t c = 0; c < a.cols(); ++c)
        {
            auto coords = im.coordinates(a.column(c));
            REQUIRE(coords);
            std::vector<Integer> back(a.rows());
            for (std::size_t i = 0; i < im.rank(); ++i)
                for (std::size_t r = 0; r < a.rows(); ++r)
                    back[r] += (*coords)[i] * im.basis()(i, r);
            CHECK(back == a.column(c));
        }
        const std::size_t r = im.rank();
        CHECK(oracle::minor_gcd(im.basis(), r) == oracle::minor_gcd(a, r));
    }
}

TEST_CASE("complex cohomology of small complexes")
{
    SECTION("0 -> Z -> 0")
    {
        std::vector<IntMatrix> maps{IntMatrix(0, 1)};
        auto h = complex_cohomology(maps);
        REQUIRE(h.size() == 2);
        CHECK(h[0] == FgAbelianGroup::free(1));
        CHECK(h[1].is_trivial());
    }
    SECTION("(a, b) -> (a - b, 2b)")
    {
        std::vector<IntMatrix> maps{IntMatrix::from_rows({{1, -1}, {0, 2}})};
        auto h = complex_cohomology(maps);
        CHECK(h[0].is_trivial());
        CHECK(h[1] == FgAbelianGroup::cyclic(2));
    }
    SECTION("nonzero composition is rejected")
    {
        std::vector<IntMatrix> maps{IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})};
        CHECK_THROWS_AS(complex_cohomology(maps), CompositionNonzero);
    }
    SECTION("mismatched shapes are rejected")
    {
        std::vector<IntMatrix> maps{IntMatrix(2, 1), IntMatrix(1, 3)};
        CHECK_THROWS_AS(complex_cohomology(maps), CompositionNonzero);
    }
}

TEST_CASE("complex cohomology agrees with rank bookkeeping and survives basis changes")
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial)
    {
        const auto k = oracle::random_complex(3 + trial % 3, rng, 4);
        const auto c = cochain_complex(k, trial % 2 == 0).complex;
        if (c.maps.empty())
            continue;
        // Conjugate every degree by a random unimodular matrix.
        std::vector<std::pair<IntMatrix, IntMatrix>> p;
        for (std::size_t n : c.ranks)
            p.push_back(oracle::random_unimodular(n, rng));
        std::vector<IntMatrix> maps;
        for (std::size_t j = 0; j < c.maps.size(); ++j)
            maps.push_back(p[j + 1].first * c.maps[j] * p[j].second);

        const auto h = complex_cohomology(maps);
        CHECK(h == complex_cohomology(c.maps));
        CHECK(h == oracle::rank_formula_cohomology(c.ranks, maps));

        long long chi = 0;
        for (std::size_t j = 0; j < h.size(); ++j)
            chi += ((j % 2 == 0) ? 1 : -1) * static_cast<long long>(h[j].free_rank());
        const long long sign = (c.first_degree % 2 == 0) ? 1 : -1;
        CHECK(sign * chi == euler_characteristic(c));
    }
}

TEST_CASE("cohomology mod m matches the universal coefficient formula")
{
    // H^j(C / m) = H^j(C) / m + Tor(H^{j+1}(C), Z/m) for free C.
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial)
    {
        const auto k = oracle::random_complex(3 + trial % 4, rng, 5);
        const auto c = cochain_complex(k, false).complex;
        const auto h = cohomology(c);
        for (Integer m : {2, 3, 4, 6})
        {
            const auto hm = cohomology_mod(c, m);
            for (int j = 0; j < hm.end_degree(); ++j)
            {
                std::vector<Integer> orders(h.at(j).free_rank(), m);
                for (const auto& d : h.at(j).invariant_factors())
                    orders.push_back(gcd(d, m));
                for (const auto& d : h.at(j + 1).invariant_factors())
                    orders.push_back(gcd(d, m));
                CHECK(hm.at(j) == FgAbelianGroup(0, orders));
            }
        }
    }
}

TEST_CASE("presented complexes")
{
    // Z/4 --2--> Z/4: kernel {0, 2}, image {0, 2}.
    std::vector<IntMatrix> maps{IntMatrix::from_rows({{2}})};
    auto h = presented_complex_cohomology(maps, {{4}, {4}});
    CHECK(h[0] == FgAbelianGroup::cyclic(2));
    CHECK(h[1] == FgAbelianGroup::cyclic(2));
    // Z/4 --1--> Z/2 is well defined, Z/2 --1--> Z/4 is not.
    CHECK_NOTHROW(presented_complex_cohomology(std::vector<IntMatrix>{IntMatrix::from_rows({{1}})}, {{4}, {2}}));
    CHECK_THROWS_AS(presented_complex_cohomology(std::vector<IntMatrix>{IntMatrix::from_rows({{1}})}, {{2}, {4}}),
                    CompositionNonzero);
}

TEST_CASE("graded groups read zero outside their range")
{
    GradedGroups g{-1, {FgAbelianGroup::free(1)}};
    CHECK(g.at(-1) == FgAbelianGroup::free(1));
    CHECK(g.at(0).is_trivial());
    CHECK(g.at(-2).is_trivial());
}

TEST_CASE("integer helpers")
{
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(6, 3) == 2);
    CHECK(lcm(4, 6) == 12);
    CHECK(gcd(0, 5) == 5);
}

TEST_CASE("matrix dump round trip")
{
    const IntMatrix a = IntMatrix::from_rows({{1, -2}, {0, 30}});
    CHECK(a.dump() == "1 -2\n0 30\n");
    CHECK(IntMatrix::parse_dump(a.dump(), 2) == a);
    CHECK_THROWS_AS(IntMatrix::parse_dump("1 x\n", 2), ParseError);
}
