#include "picloc/monomial.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "picloc/errors.hpp"

namespace picloc {

namespace {

bool divides(const ExponentVector& a, const ExponentVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Face support(const ExponentVector& e)
{
    Face s;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            s.push_back(i);
    return s;
}

std::vector<std::string> default_variables(std::size_t n)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back("X" + std::to_string(i + 1));
    return v;
}

}   // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators, std::vector<std::string> variables)
    : n_(n), variables_(variables.empty() ? default_variables(n) : std::move(variables))
{
    if (variables_.size() != n)
        throw ParseError("expected " + std::to_string(n) + " variable names");
    for (const auto& g : generators)
    {
        if (g.size() != n)
            throw ParseError("generator with " + std::to_string(g.size()) + " exponents, expected " +
                             std::to_string(n));
        if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x < 0; }))
            throw ParseError("negative exponent in a generator");
        if (std::all_of(g.begin(), g.end(), [](const Integer& x) { return x == 0; }))
            throw ParseError("the unit monomial generates the whole ring");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i)
    {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            redundant = j != i && divides(generators[j], generators[i]);
        if (!redundant)
            generators_.push_back(generators[i]);
    }
}

bool MonomialIdeal::is_squarefree() const
{
    for (const auto& g : generators_)
        for (const auto& x : g)
            if (x > 1)
                return false;
    return true;
}

MonomialIdeal MonomialIdeal::radical() const
{
    std::vector<ExponentVector> gens;
    for (const auto& g : generators_)
    {
        ExponentVector s(n_);
        for (std::size_t i = 0; i < n_; ++i)
            s[i] = g[i] != 0 ? 1 : 0;
        gens.push_back(std::move(s));
    }
    return MonomialIdeal(n_, std::move(gens), variables_);
}

std::vector<std::size_t> MonomialIdeal::nilpotent_variables() const
{
    std::vector<std::size_t> out;
    for (const auto& g : generators_)
    {
        Face s = support(g);
        if (s.size() == 1)
            out.push_back(s.front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex reduction_complex(const MonomialIdeal& ideal)
{
    const auto removed = ideal.nilpotent_variables();
    std::vector<std::size_t> new_index(ideal.variable_count(), ideal.variable_count());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ideal.variable_count(); ++i)
        if (!std::binary_search(removed.begin(), removed.end(), i))
        {
            new_index[i] = labels.size();
            labels.push_back(ideal.variables()[i]);
        }
    std::vector<Face> non_faces;
    for (const auto& g : ideal.generators())
    {
        Face s = support(g);
        if (s.size() == 1)
            continue;
        Face mapped;
        for (std::size_t v : s)
            mapped.push_back(new_index[v]);
        // A support through a removed variable is already a non-face.
        if (std::any_of(mapped.begin(), mapped.end(), [&](std::size_t v) { return v == ideal.variable_count(); }))
            continue;
        non_faces.push_back(std::move(mapped));
    }
    const std::size_t n = labels.size();
    return complex_avoiding(n, non_faces, std::move(labels));
}

DegreeBox parse_degree_box(std::string_view spec, std::size_t n)
{
    std::vector<std::pair<long long, long long>> ranges;
    std::string text(spec);
    std::stringstream parts(text);
    for (std::string part; std::getline(parts, part, ',');)
    {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw ParseError("degree box '" + text + "': expected lo:hi");
        try
        {
            std::size_t used = 0;
            long long lo = std::stoll(part.substr(0, colon), &used);
            if (used != colon)
                throw ParseError("");
            const std::string hi_text = part.substr(colon + 1);
            long long hi = std::stoll(hi_text, &used);
            if (used != hi_text.size())
                throw ParseError("");
            if (lo > hi)
                throw ParseError("");
            ranges.emplace_back(lo, hi);
        }
        catch (const std::exception&)
        {
            throw ParseError("degree box '" + text + "': expected integer ranges lo:hi with lo <= hi");
        }
    }
    if (ranges.size() == 1 && n != 1)
        ranges.assign(n, ranges.front());
    if (ranges.size() != n)
        throw ParseError("degree box '" + text + "': expected 1 or " + std::to_string(n) + " ranges");
    DegreeBox box;
    for (const auto& [lo, hi] : ranges)
    {
        box.lower.push_back(lo);
        box.upper.push_back(hi);
    }
    return box;
}

bool nilpotent_chart_nonzero(const MonomialIdeal& ideal, const Face& f, std::span<const long long> a)
{
    const std::size_t n = ideal.variable_count();
    std::vector<bool> in_f(n, false);
    for (std::size_t i : f)
        in_f[i] = true;
    // X^a must exist in K[X][X_F^{-1}].
    for (std::size_t i = 0; i < n; ++i)
        if (!in_f[i] && a[i] < 0)
            return false;
    // g divides X^a X_F^k for large k iff g_i <= a_i off F.
    auto divides_after_inverting = [&](const ExponentVector& g, bool squarefree) {
        for (std::size_t i = 0; i < n; ++i)
        {
            if (in_f[i])
                continue;
            const Integer gi = squarefree ? Integer(g[i] != 0 ? 1 : 0) : g[i];
            if (gi > a[i])
                return false;
        }
        return true;
    };
    const auto& gens = ideal.generators();
    const bool in_radical =
        std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return divides_after_inverting(g, true); });
    const bool in_ideal = std::any_of(gens.begin(), gens.end(),
                                      [&](const ExponentVector& g) { return divides_after_inverting(g, false); });
    return in_radical && !in_ideal;
}

std::vector<NilpotentEntry> nilpotent_cech_dimensions(const MonomialIdeal& ideal, const DegreeBox& box,
                                                      const FieldModel& model)
{
    if (model.characteristic() != 0)
        throw CharPUnsupported("the nilpotent correction is only available in characteristic 0, not for " +
                               model.name());
    const std::size_t n = ideal.variable_count();
    if (n > 20)
        throw ParseError("more than 20 variables");
    if (box.lower.size() != n || box.upper.size() != n)
        throw ParseError("degree box has the wrong number of ranges");

    // Nonempty subsets of the variables, grouped by size, lexicographic.
    std::vector<std::vector<Face>> subsets(n + 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    {
        Face f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                f.push_back(i);
        subsets[f.size()].push_back(std::move(f));
    }
    for (auto& s : subsets)
        std::sort(s.begin(), s.end());

    std::vector<NilpotentEntry> table;
    std::vector<long long> a = box.lower;
    while (true)
    {
        std::vector<std::vector<Face>> charts(n);
        for (std::size_t p = 0; p < n; ++p)
            for (const auto& f : subsets[p + 1])
                if (nilpotent_chart_nonzero(ideal, f, a))
                    charts[p].push_back(f);

        std::vector<std::size_t> ranks(n, 0);
        for (std::size_t p = 0; p + 1 < n; ++p)
        {
            const auto& lower = charts[p];
            const auto& upper = charts[p + 1];
            if (lower.empty() || upper.empty())
                continue;
            IntMatrix d(upper.size(), lower.size());
            for (std::size_t r = 0; r < upper.size(); ++r)
                for (std::size_t pos = 0; pos < upper[r].size(); ++pos)
                {
                    Face f = upper[r];
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos));
                    auto it = std::lower_bound(lower.begin(), lower.end(), f);
                    if (it != lower.end() && *it == f)
                        d(r, static_cast<std::size_t>(it - lower.begin())) = (pos % 2 == 0) ? 1 : -1;
                }
            ranks[p] = rank(d);
        }

        NilpotentEntry entry{a, std::vector<std::size_t>(n, 0)};
        for (std::size_t j = 0; j < n; ++j)
            entry.dimensions[j] = charts[j].size() - ranks[j] - (j > 0 ? ranks[j - 1] : 0);
        table.push_back(std::move(entry));

        // Next degree in lexicographic order.
        std::size_t i = n;
        while (i > 0 && a[i - 1] == box.upper[i - 1])
        {
            a[i - 1] = box.lower[i - 1];
            --i;
        }
        if (i == 0)
            break;
        ++a[i - 1];
    }
    return table;
}

NonreducedReport nonreduced_report(const MonomialIdeal& ideal, const FieldModel& model, const DegreeBox& box)
{
    NonreducedReport out;
    out.nilpotent = nilpotent_cech_dimensions(ideal, box, model);
    for (std::size_t v : ideal.nilpotent_variables())
        out.removed_variables.push_back(ideal.variables()[v]);
    out.reduced = stanley_reisner_cohomology(reduction_complex(ideal), model);
    return out;
}

MonomialIdeal parse_ideal_text(std::string_view text)
{
    std::vector<std::string> variables;
    std::vector<ExponentVector> generators;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line))
    {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty())
            continue;
        const std::string where = "line " + std::to_string(line_no);
        if (words.front().starts_with("variables:"))
        {
            if (seen_content)
                throw ParseError(where + ": 'variables:' must come first");
            std::string rest = words.front().substr(10);
            if (!rest.empty())
                variables.push_back(rest);
            variables.insert(variables.end(), words.begin() + 1, words.end());
            seen_content = true;
            continue;
        }
        ExponentVector g;
        for (const auto& w : words)
        {
            if (w.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(where + ": '" + w + "' is not a nonnegative integer");
            g.emplace_back(w);
        }
        generators.push_back(std::move(g));
        seen_content = true;
    }
    std::size_t n = !variables.empty() ? variables.size() : (generators.empty() ? 0 : generators.front().size());
    return MonomialIdeal(n, std::move(generators), std::move(variables));
}

MonomialIdeal read_ideal_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_text(buf.str());
}

}   // namespace picloc
