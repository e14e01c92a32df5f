#include "picloc/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "picloc/errors.hpp"

namespace picloc {

namespace {

bool is_subset(const Face& a, const Face& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> default_labels(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

std::size_t index_of(const std::vector<Face>& sorted, const Face& f)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
    return static_cast<std::size_t>(it - sorted.begin());
}

}   // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<std::string>>& facets)
{
    const bool listed = !vertices.empty();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!index.emplace(vertices[i], i).second)
            throw UnknownVertex("vertex '" + vertices[i] + "' is listed twice");

    std::vector<Face> faces;
    for (const auto& facet : facets)
    {
        Face f;
        for (const auto& label : facet)
        {
            auto it = index.find(label);
            if (it == index.end())
            {
                if (listed)
                    throw UnknownVertex("facet member '" + label + "' is not in the vertex list");
                it = index.emplace(label, vertices.size()).first;
                vertices.push_back(label);
            }
            f.push_back(it->second);
        }
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        faces.push_back(std::move(f));
    }

    if (faces.empty())
    {
        if (!vertices.empty())
            throw UncoveredVertex("vertex '" + vertices.front() + "' lies in no facet");
        return irrelevant();
    }

    std::vector<bool> covered(vertices.size(), false);
    for (const auto& f : faces)
        for (std::size_t v : f)
            covered[v] = true;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (!covered[v])
            throw UncoveredVertex("vertex '" + vertices[v] + "' lies in no facet");

    const std::size_t n = vertices.size();
    return from_index_facets(n, std::move(faces), std::move(vertices));
}

SimplicialComplex SimplicialComplex::from_index_facets(std::size_t vertex_count, std::vector<Face> facets,
                                                       std::vector<std::string> labels)
{
    SimplicialComplex k;
    k.labels_ = labels.empty() ? default_labels(vertex_count) : std::move(labels);
    for (auto& f : facets)
    {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (std::size_t v : f)
            if (v >= vertex_count)
                throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
    }
    k.void_ = facets.empty();
    k.facets_ = std::move(facets);
    k.close();
    return k;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> labels)
{
    const std::size_t n = labels.size();
    return from_index_facets(n, {}, std::move(labels));
}

SimplicialComplex SimplicialComplex::irrelevant(std::vector<std::string> labels)
{
    const std::size_t n = labels.size();
    return from_index_facets(n, {Face{}}, std::move(labels));
}

void SimplicialComplex::close()
{
    // Drop facets contained in another facet; larger ones are kept first.
    std::sort(facets_.begin(), facets_.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::vector<Face> kept;
    for (const auto& f : facets_)
        if (std::none_of(kept.begin(), kept.end(), [&](const Face& g) { return is_subset(f, g); }))
            kept.push_back(f);
    std::sort(kept.begin(), kept.end());
    facets_ = std::move(kept);

    std::vector<std::set<Face>> by_size;
    for (const auto& f : facets_)
    {
        if (by_size.size() < f.size() + 1)
            by_size.resize(f.size() + 1);
        const std::size_t subsets = std::size_t{1} << f.size();
        for (std::size_t mask = 0; mask < subsets; ++mask)
        {
            Face sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (std::size_t{1} << i))
                    sub.push_back(f[i]);
            by_size[sub.size()].insert(std::move(sub));
        }
    }
    faces_by_size_.clear();
    for (auto& s : by_size)
        faces_by_size_.emplace_back(s.begin(), s.end());
}

const std::vector<Face>& SimplicialComplex::faces_of_size(std::size_t k) const
{
    static const std::vector<Face> none;
    return k < faces_by_size_.size() ? faces_by_size_[k] : none;
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t n = 0;
    for (const auto& s : faces_by_size_)
        n += s.size();
    return n;
}

bool SimplicialComplex::contains(const Face& f) const
{
    const auto& faces = faces_of_size(f.size());
    return std::binary_search(faces.begin(), faces.end(), f);
}

bool SimplicialComplex::is_vertex_used(std::size_t v) const
{
    return contains(Face{v});
}

std::size_t SimplicialComplex::isolated_vertex_count() const
{
    return static_cast<std::size_t>(
        std::count_if(facets_.begin(), facets_.end(), [](const Face& f) { return f.size() == 1; }));
}

std::size_t SimplicialComplex::connected_components() const
{
    std::vector<std::size_t> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : faces_of_size(2))
        parent[find(e[0])] = find(e[1]);
    std::size_t components = 0;
    for (const auto& v : faces_of_size(1))
        if (find(v[0]) == v[0])
            ++components;
    return components;
}

std::vector<std::size_t> SimplicialComplex::vertex_degrees() const
{
    std::vector<std::size_t> deg(vertex_count(), 0);
    for (const auto& e : faces_of_size(2))
    {
        ++deg[e[0]];
        ++deg[e[1]];
    }
    return deg;
}

std::string SimplicialComplex::face_string(const Face& f) const
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        if (i)
            s += ',';
        s += labels_[f[i]];
    }
    return s + "}";
}

SimplicialComplex complex_avoiding(std::size_t vertex_count, const std::vector<Face>& non_faces,
                                   std::vector<std::string> labels)
{
    // Split every candidate that contains a non-face by dropping one of its vertices.
    Face all(vertex_count);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Face> candidates{all};
    for (Face s : non_faces)
    {
        std::sort(s.begin(), s.end());
        std::set<Face> next;
        for (const auto& c : candidates)
        {
            if (!is_subset(s, c))
            {
                next.insert(c);
                continue;
            }
            for (std::size_t v : s)
            {
                Face smaller = c;
                smaller.erase(std::find(smaller.begin(), smaller.end(), v));
                next.insert(std::move(smaller));
            }
        }
        candidates.clear();
        for (const auto& c : next)
            if (std::none_of(next.begin(), next.end(), [&](const Face& d) { return d != c && is_subset(c, d); }))
                candidates.push_back(c);
    }
    return SimplicialComplex::from_index_facets(vertex_count, std::move(candidates), std::move(labels));
}

SimplicialComplex link(const SimplicialComplex& k, const Face& f)
{
    if (!k.contains(f))
        throw NotAFace(k.face_string(f) + " is not a face");
    std::vector<std::size_t> new_index(k.vertex_count(), k.vertex_count());
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        if (!std::binary_search(f.begin(), f.end(), v))
        {
            new_index[v] = labels.size();
            labels.push_back(k.label(v));
        }
    std::vector<Face> facets;
    for (const auto& g : k.facets())
    {
        if (!is_subset(f, g))
            continue;
        Face rest;
        for (std::size_t v : g)
            if (!std::binary_search(f.begin(), f.end(), v))
                rest.push_back(new_index[v]);
        facets.push_back(std::move(rest));
    }
    const std::size_t n = labels.size();
    return SimplicialComplex::from_index_facets(n, std::move(facets), std::move(labels));
}

SimplicialComplex restriction(const SimplicialComplex& k, const Face& w)
{
    std::vector<std::size_t> new_index(k.vertex_count(), k.vertex_count());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        new_index[w[i]] = i;
        labels.push_back(k.label(w[i]));
    }
    std::vector<Face> facets;
    for (const auto& g : k.facets())
    {
        Face part;
        for (std::size_t v : g)
            if (new_index[v] < k.vertex_count())
                part.push_back(new_index[v]);
        facets.push_back(std::move(part));
    }
    const std::size_t n = labels.size();
    return SimplicialComplex::from_index_facets(n, std::move(facets), std::move(labels));
}

CochainComplexZ cochain_complex(const SimplicialComplex& k, bool reduced)
{
    if (reduced && k.is_void())
        throw VoidComplex("the reduced cochain complex of the void complex is undefined");
    CochainComplexZ c;
    c.reduced = reduced;
    c.complex.first_degree = reduced ? -1 : 0;
    const std::size_t first_size = reduced ? 0 : 1;
    for (std::size_t s = first_size; !k.faces_of_size(s).empty(); ++s)
    {
        c.basis.push_back(k.faces_of_size(s));
        c.complex.ranks.push_back(k.faces_of_size(s).size());
    }
    for (std::size_t i = 0; i + 1 < c.basis.size(); ++i)
    {
        const auto& lower = c.basis[i];
        const auto& upper = c.basis[i + 1];
        IntMatrix d(upper.size(), lower.size());
        for (std::size_t r = 0; r < upper.size(); ++r)
        {
            const Face& g = upper[r];
            for (std::size_t pos = 0; pos < g.size(); ++pos)
            {
                Face f = g;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos));
                d(r, index_of(lower, f)) = (pos % 2 == 0) ? 1 : -1;
            }
        }
        c.complex.maps.push_back(std::move(d));
    }
    return c;
}

GradedGroups cohomology_Z(const SimplicialComplex& k, bool reduced)
{
    if (reduced && k.is_void())
        return GradedGroups{-1, {}};
    return cohomology(cochain_complex(k, reduced).complex);
}

GradedGroups homology_Z(const SimplicialComplex& k)
{
    const FreeCochainComplex c = cochain_complex(k, false).complex;
    if (c.empty())
        return GradedGroups{0, {}};
    FreeCochainComplex reversed;
    reversed.ranks.assign(c.ranks.rbegin(), c.ranks.rend());
    for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it)
        reversed.maps.push_back(it->transpose());
    GradedGroups h = cohomology(reversed);
    std::reverse(h.groups.begin(), h.groups.end());
    h.first_degree = 0;
    return h;
}

std::vector<GroupValue> cohomology_with_coefficients(const SimplicialComplex& k, const Coefficients& coefficients)
{
    if (k.is_void())
        throw VoidComplex("no cohomology with coefficients for the void complex");
    std::vector<GroupValue> out;
    if (const auto* cyclic = std::get_if<CyclicCoefficients>(&coefficients))
    {
        GradedGroups h = cohomology_mod(cochain_complex(k, false).complex, cyclic->m);
        for (auto& g : h.groups)
        {
            GroupValue v;
            v.concrete = std::move(g);
            out.push_back(std::move(v));
        }
        return out;
    }
    const auto& model = std::get<FieldModel>(coefficients);
    GradedGroups h = homology_Z(k);
    for (int j = 0; j < h.end_degree(); ++j)
        out.push_back(coefficient_value(h.at(j), h.at(j - 1), model));
    return out;
}

}   // namespace picloc
