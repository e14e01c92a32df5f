#include <json.hpp>

#include "picloc/binoid.hpp"
#include "picloc/errors.hpp"

namespace picloc {

namespace {

using nlohmann::json;

Integer parse_integer(const json& v)
{
    if (v.is_number_integer())
        return Integer(v.get<long long>());
    if (v.is_string())
    {
        const auto s = v.get<std::string>();
        if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos)
            return Integer(s);
    }
    throw ParseError("expected an integer, got " + v.dump());
}

ExponentVector parse_vector(const json& v)
{
    if (!v.is_array())
        throw ParseError("expected an exponent vector, got " + v.dump());
    ExponentVector e;
    for (const auto& x : v)
        e.push_back(parse_integer(x));
    return e;
}

}   // namespace

BinoidPresentation parse_binoid_json(std::string_view text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError("a binoid presentation needs a \"generators\" array");

    BinoidPresentation p;
    for (const auto& g : doc["generators"])
    {
        if (!g.is_string())
            throw ParseError("generator labels must be strings");
        p.generators.push_back(g.get<std::string>());
    }

    // Relations may also be given as text, e.g. "x + y = 2z" or "2x + y = inf".
    std::string text_relations = "generators:";
    for (const auto& g : p.generators)
        text_relations += " " + g;
    text_relations += "\n";
    bool has_text = false;

    if (doc.contains("congruences"))
        for (const auto& c : doc["congruences"])
        {
            if (c.is_string())
            {
                text_relations += c.get<std::string>() + "\n";
                has_text = true;
                continue;
            }
            if (!c.is_array() || c.size() != 2)
                throw ParseError("a congruence is a pair of exponent vectors, got " + c.dump());
            p.congruences.emplace_back(parse_vector(c[0]), parse_vector(c[1]));
        }
    if (doc.contains("infinities"))
        for (const auto& h : doc["infinities"])
            p.infinities.push_back(parse_vector(h));

    if (has_text)
    {
        BinoidPresentation extra = parse_binoid_text(text_relations);
        p.congruences.insert(p.congruences.end(), extra.congruences.begin(), extra.congruences.end());
        p.infinities.insert(p.infinities.end(), extra.infinities.begin(), extra.infinities.end());
    }
    p.validate();
    return p;
}

}   // namespace picloc
