#include "picloc/report_json.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "picloc/errors.hpp"

namespace picloc {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(x.convert_to<long long>());
    return json(x.str());
}

Integer integer_from(const json& v)
{
    if (v.is_number_integer())
        return Integer(v.get<long long>());
    if (v.is_string())
        return Integer(v.get<std::string>());
    throw ParseError("expected an integer, got " + v.dump());
}

json integers_json(const std::vector<Integer>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(integer_json(x));
    return a;
}

std::vector<Integer> integers_from(const json& v)
{
    std::vector<Integer> out;
    for (const auto& x : v)
        out.push_back(integer_from(x));
    return out;
}

json group_json(const FgAbelianGroup& g)
{
    json o;
    o["free_rank"] = g.free_rank();
    o["torsion"] = integers_json(g.invariant_factors());
    return o;
}

FgAbelianGroup group_from(const json& o)
{
    return FgAbelianGroup(o.at("free_rank").get<std::size_t>(), integers_from(o.at("torsion")));
}

json field_json(const GroupValue& v)
{
    json o;
    o["free_rank"] = v.concrete.free_rank();
    o["torsion"] = integers_json(v.concrete.invariant_factors());
    o["kstar_copies"] = v.kstar_copies;
    o["mu"] = integers_json(v.mu);
    o["ext"] = integers_json(v.ext);
    o["infinite_ext"] = v.ext_infinite;
    return o;
}

GroupValue field_from(const json& o)
{
    GroupValue v;
    v.concrete = group_from(o);
    v.kstar_copies = o.at("kstar_copies").get<std::size_t>();
    v.mu = integers_from(o.at("mu"));
    v.ext = integers_from(o.at("ext"));
    v.ext_infinite = o.at("infinite_ext").get<bool>();
    return v;
}

json report_json(const CohomologyReport& report)
{
    json degrees = json::array();
    for (const auto& d : report.degrees)
    {
        const GroupValue total = total_value(d);
        json o;
        o["j"] = d.j;
        o["free_rank"] = total.concrete.free_rank();
        o["torsion"] = integers_json(total.concrete.invariant_factors());
        o["combinatorial"] = group_json(d.combinatorial);
        json per_vertex = json::object();
        for (const auto& [label, g] : d.per_vertex)
            per_vertex[label] = group_json(g);
        o["per_vertex"] = std::move(per_vertex);
        if (d.field)
            o["field"] = field_json(*d.field);
        degrees.push_back(std::move(o));
    }
    json out;
    out["degrees"] = std::move(degrees);
    out["provenance"] = to_string(report.provenance);
    return out;
}

CohomologyReport report_from(const json& doc)
{
    CohomologyReport report;
    const std::string provenance = doc.at("provenance").get<std::string>();
    if (provenance == "direct")
        report.provenance = Provenance::Direct;
    else if (provenance == "formula")
        report.provenance = Provenance::Formula;
    else if (provenance == "both-agree")
        report.provenance = Provenance::BothAgree;
    else
        throw ParseError("unknown provenance '" + provenance + "'");
    for (const auto& o : doc.at("degrees"))
    {
        DegreeReport d;
        d.j = o.at("j").get<int>();
        d.combinatorial = group_from(o.contains("combinatorial") ? o.at("combinatorial") : o);
        if (o.contains("per_vertex"))
            for (const auto& [label, g] : o.at("per_vertex").items())
                d.per_vertex.emplace_back(label, group_from(g));
        if (o.contains("field"))
            d.field = field_from(o.at("field"));
        report.degrees.push_back(std::move(d));
    }
    return report;
}

std::string degree_key(const std::vector<long long>& a)
{
    std::string key = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        key += (i ? "," : "") + std::to_string(a[i]);
    return key + ")";
}

std::string table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
    {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto& row : rows)
    {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c)
        {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

}   // namespace

std::string report_to_json(const CohomologyReport& report, int indent)
{
    return report_json(report).dump(indent);
}

CohomologyReport report_from_json(std::string_view text)
{
    try
    {
        return report_from(json::parse(text));
    }
    catch (const json::exception& e)
    {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string nonreduced_to_json(const NonreducedReport& report, int indent)
{
    json out;
    out["reduced"] = report_json(report.reduced);
    out["removed_variables"] = report.removed_variables;
    json table = json::object();
    for (const auto& e : report.nilpotent)
        table[degree_key(e.degree)] = e.dimensions;
    out["nilpotent"] = std::move(table);
    return out.dump(indent);
}

std::string report_to_table(const CohomologyReport& report)
{
    std::vector<std::vector<std::string>> rows{{"j", "combinatorial", "field", "total"}};
    bool any_field = false;
    for (const auto& d : report.degrees)
    {
        any_field = any_field || d.field.has_value();
        rows.push_back({std::to_string(d.j), d.combinatorial.to_string(), d.field ? d.field->to_string() : "-",
                        total_value(d).to_string()});
    }
    if (!any_field)
        for (auto& row : rows)
            row.resize(2);
    std::string out = "provenance: " + to_string(report.provenance) + "\n" + table(rows);

    if (!report.degrees.empty() && !report.degrees.front().per_vertex.empty())
    {
        std::vector<std::vector<std::string>> split{{"j"}};
        for (const auto& [label, g] : report.degrees.front().per_vertex)
            split.front().push_back(label);
        for (const auto& d : report.degrees)
        {
            std::vector<std::string> row{std::to_string(d.j)};
            for (const auto& [label, g] : d.per_vertex)
                row.push_back(g.to_string());
            split.push_back(std::move(row));
        }
        out += "\nper vertex (combinatorial):\n" + table(split);
    }
    return out;
}

std::string nonreduced_to_table(const NonreducedReport& report)
{
    std::string out = report_to_table(report.reduced);
    if (!report.removed_variables.empty())
    {
        out += "\nnilpotent variables:";
        for (const auto& v : report.removed_variables)
            out += " " + v;
        out += "\n";
    }
    std::vector<std::vector<std::string>> rows{{"degree"}};
    const std::size_t n = report.nilpotent.empty() ? 0 : report.nilpotent.front().dimensions.size();
    for (std::size_t j = 0; j < n; ++j)
        rows.front().push_back("dim H^" + std::to_string(j));
    for (const auto& e : report.nilpotent)
    {
        if (std::all_of(e.dimensions.begin(), e.dimensions.end(), [](std::size_t x) { return x == 0; }))
            continue;
        std::vector<std::string> row{degree_key(e.degree)};
        for (std::size_t x : e.dimensions)
            row.push_back(std::to_string(x));
        rows.push_back(std::move(row));
    }
    out += "\nnilpotent part (nonzero degrees):\n";
    out += rows.size() == 1 ? "none\n" : table(rows);
    return out;
}

}   // namespace picloc
