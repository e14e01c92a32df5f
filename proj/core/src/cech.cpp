#include "picloc/cech.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "picloc/errors.hpp"

namespace picloc {

namespace {

std::vector<Face> combinations(std::size_t n, std::size_t k)
{
    std::vector<Face> out;
    if (k > n)
        return out;
    Face c(k);
    for (std::size_t i = 0; i < k; ++i)
        c[i] = i;
    while (true)
    {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return out;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

Face with_vertex(const Face& f, std::size_t v)
{
    Face g = f;
    g.insert(std::upper_bound(g.begin(), g.end(), v), v);
    return g;
}

std::string face_name(const Face& f, const std::vector<std::string>& labels)
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        if (i)
            s += ',';
        s += f[i] < labels.size() ? labels[f[i]] : std::to_string(f[i]);
    }
    return s + "}";
}

IntMatrix coordinate_inclusion(const Face& f, const Face& g)
{
    IntMatrix m(g.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        m(static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), f[i]) - g.begin()), i) = 1;
    return m;
}

}   // namespace

std::size_t CechComplex::rank(std::size_t p) const
{
    std::size_t r = 0;
    for (const auto& b : blocks[p])
        r += b.rank;
    return r;
}

std::vector<std::size_t> CechComplex::ranks() const
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < blocks.size(); ++p)
        out.push_back(rank(p));
    return out;
}

std::string CechComplex::dump(const std::vector<std::string>& labels) const
{
    std::ostringstream out;
    for (std::size_t p = 0; p < blocks.size(); ++p)
    {
        out << "degree " << p << ":";
        for (const auto& b : blocks[p])
            out << ' ' << face_name(b.face, labels);
        out << '\n';
        if (p < coboundaries.size())
            out << coboundaries[p].dump();
    }
    return out.str();
}

CechComplex build_cech_complex(const UnitSheafModel& model)
{
    CechComplex c;
    const std::size_t n = model.n;
    std::map<Face, UnitGroupValue> cache;
    auto value = [&](const Face& f) -> const UnitGroupValue& {
        auto it = cache.find(f);
        if (it == cache.end())
            it = cache.emplace(f, model.value(f)).first;
        return it->second;
    };

    std::vector<std::map<Face, std::size_t>> offsets(n);
    for (std::size_t p = 0; p < n; ++p)
    {
        std::vector<Face> sets = model.candidates ? model.candidates(p + 1) : combinations(n, p + 1);
        std::sort(sets.begin(), sets.end());
        std::vector<CechBlock> blocks;
        std::size_t offset = 0;
        for (const auto& f : sets)
        {
            const auto& v = value(f);
            if (v.is_zero())
                continue;
            blocks.push_back(CechBlock{f, v.group.rank()});
            offsets[p][f] = offset;
            offset += v.group.rank();
        }
        c.blocks.push_back(std::move(blocks));
    }

    // Identity and composition along one-step chains F < G < H.
    for (std::size_t p = 0; p < n; ++p)
        for (const auto& block : c.blocks[p])
        {
            const Face& f = block.face;
            if (model.restrict(f, f) != IntMatrix::identity(block.rank))
                throw RestrictionIncoherent("restriction from " + face_name(f, {}) + " to itself is not the identity");
            for (std::size_t i = 0; i < n; ++i)
            {
                if (std::binary_search(f.begin(), f.end(), i))
                    continue;
                const Face g = with_vertex(f, i);
                const bool g_zero = value(g).is_zero();
                for (std::size_t j = 0; j < n; ++j)
                {
                    if (std::binary_search(g.begin(), g.end(), j))
                        continue;
                    const Face h = with_vertex(g, j);
                    if (value(h).is_zero())
                        continue;
                    const IntMatrix direct = model.restrict(f, h);
                    const bool ok = g_zero ? direct.is_zero()
                                           : direct == model.restrict(g, h) * model.restrict(f, g);
                    if (!ok)
                        throw RestrictionIncoherent("restrictions along " + face_name(f, {}) + " < " +
                                                    face_name(g, {}) + " < " + face_name(h, {}) +
                                                    " do not compose");
                }
            }
        }

    for (std::size_t p = 0; p + 1 < n; ++p)
    {
        IntMatrix d(c.rank(p + 1), c.rank(p));
        for (const auto& [g, row0] : offsets[p + 1])
            for (std::size_t pos = 0; pos < g.size(); ++pos)
            {
                Face f = g;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos));
                auto it = offsets[p].find(f);
                if (it == offsets[p].end())
                    continue;
                const IntMatrix r = model.restrict(f, g);
                const std::size_t col0 = it->second;
                for (std::size_t a = 0; a < r.rows(); ++a)
                    for (std::size_t b = 0; b < r.cols(); ++b)
                        d(row0 + a, col0 + b) = (pos % 2 == 0) ? r(a, b) : Integer(-r(a, b));
            }
        c.coboundaries.push_back(std::move(d));
    }
    for (std::size_t p = 0; p + 1 < c.coboundaries.size(); ++p)
        if (!(c.coboundaries[p + 1] * c.coboundaries[p]).is_zero())
            throw RestrictionIncoherent("the assembled coboundaries do not compose to zero in degree " +
                                        std::to_string(p));
    return c;
}

std::vector<FgAbelianGroup> cech_cohomology(const CechComplex& c)
{
    if (c.blocks.empty())
        return {};
    if (c.coboundaries.empty())
    {
        if (c.moduli.empty())
            return {FgAbelianGroup::free(c.rank(0))};
        return {FgAbelianGroup(0, c.moduli[0])};
    }
    if (c.moduli.empty())
        return complex_cohomology(c.coboundaries);
    return presented_complex_cohomology(c.coboundaries, c.moduli);
}

CechComplex constant_sheaf_complex(const SimplicialComplex& k, const FgAbelianGroup& g)
{
    if (k.is_void())
        throw VoidComplex("no constant sheaf complex for the void complex");
    CechComplex c;
    const std::size_t n = k.vertex_count();
    const std::size_t width = g.free_rank() + g.invariant_factors().size();
    std::vector<Integer> block_moduli(g.free_rank(), Integer(0));
    block_moduli.insert(block_moduli.end(), g.invariant_factors().begin(), g.invariant_factors().end());

    for (std::size_t p = 0; p < n; ++p)
    {
        std::vector<CechBlock> blocks;
        if (width > 0)
            for (const auto& f : k.faces_of_size(p + 1))
                blocks.push_back(CechBlock{f, width});
        c.blocks.push_back(std::move(blocks));
    }
    // The block of (F, G) is (-1)^pos times the identity of G, pos being the
    // position in G of the vertex not in F.
    for (std::size_t p = 0; p + 1 < n; ++p)
    {
        IntMatrix d(c.rank(p + 1), c.rank(p));
        const auto& lower = k.faces_of_size(p + 1);
        const auto& upper = k.faces_of_size(p + 2);
        for (std::size_t row = 0; row < upper.size() && width > 0; ++row)
            for (std::size_t pos = 0; pos < upper[row].size(); ++pos)
            {
                Face f = upper[row];
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos));
                const auto col = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), f) - lower.begin());
                for (std::size_t e = 0; e < width; ++e)
                    d(row * width + e, col * width + e) = (pos % 2 == 0) ? 1 : -1;
            }
        c.coboundaries.push_back(std::move(d));
    }
    if (!g.is_free())
        for (std::size_t p = 0; p < n; ++p)
        {
            std::vector<Integer> m;
            for (std::size_t b = 0; b < c.blocks[p].size(); ++b)
                m.insert(m.end(), block_moduli.begin(), block_moduli.end());
            c.moduli.push_back(std::move(m));
        }
    return c;
}

UnitSheafModel simplicial_unit_model(const SimplicialComplex& k)
{
    UnitSheafModel m;
    m.n = k.vertex_count();
    m.value = [k](const Face& f) { return simplicial_unit_sheaf_value(k, f); };
    m.restrict = [](const Face& f, const Face& g) { return coordinate_inclusion(f, g); };
    m.candidates = [k](std::size_t size) { return k.faces_of_size(size); };
    return m;
}

UnitSheafModel simplicial_vertex_model(const SimplicialComplex& k, std::size_t v)
{
    UnitSheafModel m;
    m.n = k.vertex_count();
    m.value = [k, v](const Face& f) {
        if (!std::binary_search(f.begin(), f.end(), v) || !k.contains(f))
            return UnitGroupValue::zero();
        return UnitGroupValue{false, Subgroup::full(1)};
    };
    m.restrict = [](const Face&, const Face&) { return IntMatrix::identity(1); };
    m.candidates = [k, v](std::size_t size) {
        std::vector<Face> out;
        for (const auto& f : k.faces_of_size(size))
            if (std::binary_search(f.begin(), f.end(), v))
                out.push_back(f);
        return out;
    };
    return m;
}

UnitSheafModel integral_binoid_model(const DifferenceGroup& gamma, const std::vector<std::size_t>& cover)
{
    auto cache = std::make_shared<std::map<Face, UnitGroupValue>>();
    auto value = [gamma, cover, cache](const Face& f) -> UnitGroupValue {
        auto it = cache->find(f);
        if (it != cache->end())
            return it->second;
        std::vector<std::size_t> generators;
        for (std::size_t i : f)
            generators.push_back(cover[i]);
        UnitGroupValue v = localization_unit_group(gamma, generators);
        cache->emplace(f, v);
        return v;
    };
    UnitSheafModel m;
    m.n = cover.size();
    m.value = value;
    m.restrict = [value](const Face& f, const Face& g) { return value(f).group.inclusion_into(value(g).group); };
    return m;
}

}   // namespace picloc
