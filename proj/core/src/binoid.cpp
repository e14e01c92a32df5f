#include "picloc/binoid.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "picloc/cone.hpp"
#include "picloc/errors.hpp"

namespace picloc {

namespace {

bool is_zero_vector(const ExponentVector& e)
{
    return std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; });
}

Face support(const ExponentVector& e)
{
    Face s;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            s.push_back(i);
    return s;
}

ExponentVector indicator(std::size_t n, const std::vector<std::size_t>& f)
{
    ExponentVector e(n);
    for (std::size_t i : f)
        e[i] = 1;
    return e;
}

}   // namespace

void BinoidPresentation::validate() const
{
    const std::size_t n = size();
    std::set<std::string> seen;
    for (const auto& g : generators)
        if (!seen.insert(g).second)
            throw ParseError("generator '" + g + "' is listed twice");
    auto check = [&](const ExponentVector& e) {
        if (e.size() != n)
            throw ParseError("exponent vector of length " + std::to_string(e.size()) + ", expected " +
                             std::to_string(n));
        for (const auto& x : e)
            if (x < 0)
                throw ParseError("negative exponent in " + term_string(e));
    };
    for (const auto& [a, b] : congruences)
    {
        check(a);
        check(b);
        if (a == b)
            throw ParseError("congruence " + term_string(a) + " = " + term_string(b) + " is trivial");
    }
    for (const auto& h : infinities)
        check(h);
}

std::string BinoidPresentation::term_string(const ExponentVector& e) const
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i)
    {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (e[i] != 1)
            out += e[i].str();
        out += i < generators.size() ? generators[i] : "x" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

ExponentVector parse_side(const BinoidPresentation& p, std::string_view side, const std::string& where)
{
    ExponentVector e(p.size());
    std::string text = trim(side);
    if (text == "0")
        return e;
    std::size_t start = 0;
    while (start <= text.size())
    {
        std::size_t plus = text.find('+', start);
        std::string term = trim(std::string_view(text).substr(start, plus == std::string::npos ? std::string::npos
                                                                                                  : plus - start));
        if (term.empty())
            throw ParseError(where + ": empty term");
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
            ++digits;
        Integer coefficient = digits ? Integer(term.substr(0, digits)) : Integer(1);
        std::string label = trim(std::string_view(term).substr(digits));
        if (!label.empty() && label.front() == '*')
            label = trim(std::string_view(label).substr(1));
        auto it = std::find(p.generators.begin(), p.generators.end(), label);
        if (it == p.generators.end())
            throw ParseError(where + ": unknown generator '" + label + "'");
        e[static_cast<std::size_t>(it - p.generators.begin())] += coefficient;
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return e;
}

void add_relation(BinoidPresentation& p, std::string_view relation, const std::string& where)
{
    const auto eq = relation.find('=');
    if (eq == std::string_view::npos || relation.find('=', eq + 1) != std::string_view::npos)
        throw ParseError(where + ": expected exactly one '='");
    ExponentVector lhs = parse_side(p, relation.substr(0, eq), where);
    std::string rhs = trim(relation.substr(eq + 1));
    if (rhs == "inf" || rhs == "∞")
        p.infinities.push_back(std::move(lhs));
    else
        p.congruences.emplace_back(std::move(lhs), parse_side(p, rhs, where));
}

}   // namespace

BinoidPresentation parse_binoid_text(std::string_view text)
{
    BinoidPresentation p;
    bool have_generators = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string content = trim(line);
        if (content.empty())
            continue;
        const std::string where = "line " + std::to_string(line_no);
        if (content.starts_with("generators:"))
        {
            if (have_generators)
                throw ParseError(where + ": generators listed twice");
            std::istringstream words(content.substr(11));
            for (std::string w; words >> w;)
                p.generators.push_back(w);
            have_generators = true;
            continue;
        }
        if (!have_generators)
            throw ParseError(where + ": relations before the 'generators:' line");
        add_relation(p, content, where);
    }
    if (!have_generators)
        throw ParseError("missing 'generators:' line");
    p.validate();
    return p;
}

BinoidPresentation read_binoid_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_binoid_json(text);
    return parse_binoid_text(text);
}

DifferenceGroup difference_group(const BinoidPresentation& p)
{
    if (!p.infinities.empty())
        throw NonIntegral("the presentation has infinity relations, e.g. " + p.term_string(p.infinities.front()) +
                          " = inf");
    const std::size_t n = p.size();
    IntMatrix relations(p.congruences.size(), n);
    for (std::size_t r = 0; r < p.congruences.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            relations(r, c) = p.congruences[r].first[c] - p.congruences[r].second[c];

    // Row span of R is carried by x -> x V onto the span of d_i e_i, i < rank.
    SmithForm s = smith_normal_form(relations);
    std::vector<Integer> torsion;
    for (const auto& d : s.nonzero_diagonal())
        if (d > 1)
            torsion.push_back(d);
    if (!torsion.empty())
    {
        std::string rels;
        for (const auto& [a, b] : p.congruences)
            rels += (rels.empty() ? "" : ", ") + p.term_string(a) + " = " + p.term_string(b);
        std::string orders;
        for (const auto& d : torsion)
            orders += (orders.empty() ? "Z/" : " + Z/") + d.str();
        throw TorsionDetected("the difference group of (" + rels + ") has torsion " + orders);
    }

    DifferenceGroup gamma;
    gamma.rank = n - s.rank;
    gamma.projection = IntMatrix(gamma.rank, n);
    for (std::size_t k = 0; k < gamma.rank; ++k)
        for (std::size_t j = 0; j < n; ++j)
            gamma.projection(k, j) = s.right(j, s.rank + k);

    for (std::size_t j = 0; j < n; ++j)
    {
        auto image = gamma.generator_image(j);
        if (std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; }))
            throw NonCancellative("generator '" + p.generators[j] +
                                  "' becomes zero in the difference group, so the binoid is not cancellative");
    }
    return gamma;
}

bool minimal_face_contains(const DifferenceGroup& gamma, std::span<const Integer> f, std::size_t i)
{
    const auto fbar = gamma.project(f);
    const auto xbar = gamma.generator_image(i);
    return strictly_feasible(gamma.projection, xbar, fbar);
}

bool minimal_face_contains(const BinoidPresentation& p, const ExponentVector& f, std::size_t i)
{
    return minimal_face_contains(difference_group(p), f, i);
}

std::vector<std::size_t> unit_generators(const DifferenceGroup& gamma)
{
    std::vector<std::size_t> units;
    const std::vector<Integer> zero(gamma.projection.cols());
    for (std::size_t i = 0; i < gamma.projection.cols(); ++i)
        if (minimal_face_contains(gamma, zero, i))
            units.push_back(i);
    return units;
}

UnitGroupValue localization_unit_group(const DifferenceGroup& gamma, const std::vector<std::size_t>& f)
{
    const std::size_t n = gamma.projection.cols();
    const ExponentVector xf = indicator(n, f);
    std::vector<std::vector<Integer>> gens;
    for (std::size_t i = 0; i < n; ++i)
        if (minimal_face_contains(gamma, xf, i))
            gens.push_back(gamma.generator_image(i));
    return UnitGroupValue{false, Subgroup::generated_by(gamma.rank, IntMatrix::from_rows(gens, gamma.rank))};
}

UnitGroupValue localization_unit_group(const BinoidPresentation& p, const std::vector<std::size_t>& f)
{
    return localization_unit_group(difference_group(p), f);
}

UnitGroupValue simplicial_unit_sheaf_value(const SimplicialComplex& k, const Face& f)
{
    if (!k.contains(f))
        return UnitGroupValue::zero();
    return UnitGroupValue{false, Subgroup::full(f.size())};
}

BinoidPresentation simplicial_binoid_of(const SimplicialComplex& k)
{
    BinoidPresentation p;
    p.generators = k.labels();
    const std::size_t n = k.vertex_count();
    std::set<Face> minimal;
    if (k.is_void())
        minimal.insert(Face{});
    for (std::size_t s = 0; !k.faces_of_size(s).empty(); ++s)
        for (const auto& f : k.faces_of_size(s))
            for (std::size_t v = 0; v < n; ++v)
            {
                if (std::binary_search(f.begin(), f.end(), v))
                    continue;
                Face g = f;
                g.insert(std::upper_bound(g.begin(), g.end(), v), v);
                if (k.contains(g))
                    continue;
                bool all_faces = true;
                for (std::size_t pos = 0; pos < g.size() && all_faces; ++pos)
                {
                    Face sub = g;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(pos));
                    all_faces = k.contains(sub);
                }
                if (all_faces)
                    minimal.insert(std::move(g));
            }
    std::vector<Face> ordered(minimal.begin(), minimal.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Face& a, const Face& b) { return a.size() < b.size(); });
    for (const auto& g : ordered)
        p.infinities.push_back(indicator(n, g));
    return p;
}

std::variant<SimplicialComplex, NotSimplicial> detect_simplicial(const BinoidPresentation& p)
{
    if (!p.congruences.empty())
        return NotSimplicial{"congruence " + p.term_string(p.congruences.front().first) + " = " +
                             p.term_string(p.congruences.front().second) + " is present"};
    const std::size_t n = p.size();
    std::vector<Face> supports;
    for (const auto& h : p.infinities)
    {
        if (is_zero_vector(h))
            return NotSimplicial{"0 = inf"};
        supports.push_back(support(h));
    }
    for (std::size_t a = 0; a < p.infinities.size(); ++a)
    {
        bool reduced = false;
        for (std::size_t b = 0; b < p.infinities.size() && !reduced; ++b)
        {
            const auto& h = p.infinities[b];
            reduced = std::all_of(supports[b].begin(), supports[b].end(), [&](std::size_t i) {
                return h[i] == 1 && std::binary_search(supports[a].begin(), supports[a].end(), i);
            });
        }
        if (!reduced)
            return NotSimplicial{"not reduced: " + p.term_string(p.infinities[a]) + " = inf is not implied by a "
                                 "squarefree relation"};
    }
    for (const auto& s : supports)
        if (s.size() == 1)
            return NotSimplicial{"generator '" + p.generators[s.front()] + "' is infinite"};

    return complex_avoiding(n, supports, p.generators);
}

bool units_equal_reduction_check(const BinoidPresentation& p)
{
    if (p.infinities.empty())
        return true;
    if (!p.congruences.empty())
        throw UnsupportedPresentation("congruences together with infinity relations");
    const std::size_t n = p.size();
    if (n > 20)
        throw UnsupportedPresentation("more than 20 generators for the exhaustive comparison");

    // x_F = inf in M iff some h <= k * 1_F; in M_red iff some supp(h) lies in F.
    auto infinite_in_m = [&](std::uint32_t mask) {
        return std::any_of(p.infinities.begin(), p.infinities.end(), [&](const ExponentVector& h) {
            Integer k = 0;
            for (const auto& x : h)
                k = std::max(k, x);
            for (std::size_t i = 0; i < n; ++i)
                if (h[i] > (((mask >> i) & 1u) ? k : Integer(0)))
                    return false;
            return true;
        });
    };
    auto infinite_in_reduction = [&](std::uint32_t mask) {
        return std::any_of(p.infinities.begin(), p.infinities.end(), [&](const ExponentVector& h) {
            for (std::size_t i : support(h))
                if (!((mask >> i) & 1u))
                    return false;
            return true;
        });
    };
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (infinite_in_m(mask) != infinite_in_reduction(mask))
            return false;
    return true;
}

}   // namespace picloc
