#include <cassert>
#include <string>

#include "picloc/abelian.hpp"
#include "picloc/errors.hpp"

namespace picloc {

namespace {

bool divides(const Integer& modulus, const Integer& x)
{
    if (modulus == 0)
        return x == 0;
    return x % modulus == 0;
}

std::vector<std::size_t> ranks_of(std::span<const IntMatrix> maps)
{
    std::vector<std::size_t> ranks;
    if (maps.empty())
        return ranks;
    ranks.push_back(maps.front().cols());
    for (std::size_t j = 0; j < maps.size(); ++j)
    {
        if (maps[j].cols() != ranks.back())
            throw CompositionNonzero("d^" + std::to_string(j) + " has the wrong number of columns");
        ranks.push_back(maps[j].rows());
    }
    return ranks;
}

// Checks that each map respects the moduli lattices and that consecutive maps compose to zero.
void check_complex(std::span<const IntMatrix> maps, const std::vector<std::vector<Integer>>& moduli)
{
    for (std::size_t j = 0; j < maps.size(); ++j)
    {
        const IntMatrix& d = maps[j];
        for (std::size_t c = 0; c < d.cols(); ++c)
        {
            const Integer& mc = moduli[j][c];
            if (mc == 0)
                continue;
            for (std::size_t r = 0; r < d.rows(); ++r)
                if (!divides(moduli[j + 1][r], d(r, c) * mc))
                    throw CompositionNonzero("d^" + std::to_string(j) + " is not well defined on the quotient");
        }
    }
    for (std::size_t j = 0; j + 1 < maps.size(); ++j)
    {
        IntMatrix dd = maps[j + 1] * maps[j];
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t c = 0; c < dd.cols(); ++c)
                if (!divides(moduli[j + 2][r], dd(r, c)))
                    throw CompositionNonzero("d^" + std::to_string(j + 1) + " d^" + std::to_string(j) + " != 0");
    }
}

// Subgroup/cokernel computation shared by the free and the presented case.
std::vector<FgAbelianGroup> cohomology_of(const std::vector<std::size_t>& ranks,
                                          std::span<const IntMatrix> maps,
                                          const std::vector<std::vector<Integer>>& moduli)
{
    std::vector<FgAbelianGroup> out;
    out.reserve(ranks.size());
    for (std::size_t j = 0; j < ranks.size(); ++j)
    {
        const std::size_t n = ranks[j];
        bool has_moduli = false;
        for (const auto& x : moduli[j])
            if (x != 0)
                has_moduli = true;

        // Cocycles: x with d^j x in the modulus lattice of degree j + 1.
        Subgroup cocycles;
        if (j == maps.size())
            cocycles = Subgroup::full(n);
        else
        {
            const IntMatrix& d = maps[j];
            bool next_moduli = false;
            for (const auto& x : moduli[j + 1])
                if (x != 0)
                    next_moduli = true;
            if (!next_moduli)
                cocycles = kernel_basis(d);
            else
            {
                std::vector<Integer> neg;
                for (const auto& x : moduli[j + 1])
                    neg.push_back(-x);
                Subgroup k = kernel_basis(hconcat(d, IntMatrix::diagonal(neg)));
                IntMatrix projected(k.rank(), n);
                for (std::size_t i = 0; i < k.rank(); ++i)
                    for (std::size_t c = 0; c < n; ++c)
                        projected(i, c) = k.basis()(i, c);
                cocycles = Subgroup::generated_by(n, projected);
            }
        }

        // Coboundaries: image of d^{j-1} plus the modulus lattice in degree j.
        std::vector<std::vector<Integer>> gens;
        if (j > 0)
            for (std::size_t c = 0; c < maps[j - 1].cols(); ++c)
                gens.push_back(maps[j - 1].column(c));
        if (has_moduli)
            for (std::size_t c = 0; c < n; ++c)
                if (moduli[j][c] != 0)
                {
                    std::vector<Integer> e(n);
                    e[c] = moduli[j][c];
                    gens.push_back(std::move(e));
                }

        IntMatrix coords(cocycles.rank(), gens.size());
        for (std::size_t g = 0; g < gens.size(); ++g)
        {
            auto x = cocycles.coordinates(gens[g]);
            if (!x)
                throw CompositionNonzero("a coboundary in degree " + std::to_string(j) + " is not a cocycle");
            for (std::size_t i = 0; i < cocycles.rank(); ++i)
                coords(i, g) = (*x)[i];
        }
        out.push_back(cokernel(coords));
    }
    return out;
}

std::vector<std::vector<Integer>> zero_moduli(const std::vector<std::size_t>& ranks)
{
    std::vector<std::vector<Integer>> moduli;
    for (std::size_t n : ranks)
        moduli.emplace_back(n);
    return moduli;
}

}   // namespace

std::vector<FgAbelianGroup> complex_cohomology(std::span<const IntMatrix> maps)
{
    auto ranks = ranks_of(maps);
    auto moduli = zero_moduli(ranks);
    check_complex(maps, moduli);
    return cohomology_of(ranks, maps, moduli);
}

std::vector<FgAbelianGroup> presented_complex_cohomology(std::span<const IntMatrix> maps,
                                                         const std::vector<std::vector<Integer>>& moduli)
{
    auto ranks = ranks_of(maps);
    assert(moduli.size() == ranks.size());
    for (std::size_t j = 0; j < ranks.size(); ++j)
        assert(moduli[j].size() == ranks[j]);
    check_complex(maps, moduli);
    return cohomology_of(ranks, maps, moduli);
}

std::vector<FgAbelianGroup> complex_cohomology_mod(std::span<const IntMatrix> maps, const Integer& m)
{
    auto ranks = ranks_of(maps);
    std::vector<std::vector<Integer>> moduli;
    for (std::size_t n : ranks)
        moduli.emplace_back(n, m);
    return presented_complex_cohomology(maps, moduli);
}

namespace {

GradedGroups graded(const FreeCochainComplex& complex, const Integer* m)
{
    GradedGroups out{complex.first_degree, {}};
    if (complex.empty())
        return out;
    assert(complex.maps.size() + 1 == complex.ranks.size());
    if (complex.maps.empty())
    {
        const std::size_t n = complex.ranks.front();
        if (m)
            out.groups.push_back(FgAbelianGroup(0, std::vector<Integer>(n, *m)));
        else
            out.groups.push_back(FgAbelianGroup::free(n));
        return out;
    }
    out.groups = m ? complex_cohomology_mod(complex.maps, *m) : complex_cohomology(complex.maps);
    return out;
}

}   // namespace

GradedGroups cohomology(const FreeCochainComplex& complex)
{
    return graded(complex, nullptr);
}

GradedGroups cohomology_mod(const FreeCochainComplex& complex, const Integer& m)
{
    return graded(complex, &m);
}

long long euler_characteristic(const FreeCochainComplex& complex)
{
    long long chi = 0;
    for (std::size_t i = 0; i < complex.ranks.size(); ++i)
    {
        long long r = static_cast<long long>(complex.ranks[i]);
        int degree = complex.first_degree + static_cast<int>(i);
        chi += (degree % 2 == 0) ? r : -r;
    }
    return chi;
}

}   // namespace picloc
