#include "picloc/field_model.hpp"

#include <sstream>

#include "picloc/errors.hpp"

namespace picloc {

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_prime_power(const Integer& n)
{
    if (n < 2)
        return false;
    Integer p = 2;
    while (n % p != 0)
        ++p;
    Integer rest = n;
    while (rest % p == 0)
        rest /= p;
    return rest == 1;
}

FieldModel FieldModel::finite_field(const Integer& q)
{
    if (!is_prime_power(q))
        throw UnsupportedModel("q = " + q.str() + " is not a prime power");
    return {Kind::FiniteField, q};
}

FieldModel FieldModel::alg_closed_char_p(const Integer& p)
{
    if (!is_prime(p))
        throw UnsupportedModel("p = " + p.str() + " is not prime");
    return {Kind::AlgClosedCharP, p};
}

Integer FieldModel::characteristic() const
{
    switch (kind)
    {
        case Kind::FiniteField:
        {
            Integer p = 2;
            while (parameter % p != 0)
                ++p;
            return p;
        }
        case Kind::AlgClosedCharP:
            return parameter;
        default:
            return 0;
    }
}

std::string FieldModel::name() const
{
    switch (kind)
    {
        case Kind::FiniteField: return "F_" + parameter.str();
        case Kind::AlgClosedChar0: return "Qbar";
        case Kind::AlgClosedCharP: return "Fpbar(" + parameter.str() + ")";
        case Kind::Reals: return "R";
        case Kind::Rationals: return "Q";
        case Kind::Symbolic: return "symbolic";
    }
    return "?";
}

namespace {

Integer parse_parameter(std::string_view spec, std::string_view text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("field spec '" + std::string(spec) + "': expected a positive integer");
    return Integer(std::string(text));
}

}   // namespace

FieldModel parse_field_model(std::string_view spec)
{
    if (spec.starts_with("q="))
        return FieldModel::finite_field(parse_parameter(spec, spec.substr(2)));
    if (spec.starts_with("Fpbar="))
        return FieldModel::alg_closed_char_p(parse_parameter(spec, spec.substr(6)));
    if (spec == "Qbar" || spec == "Cstar")
        return FieldModel::alg_closed_char0();
    if (spec == "R")
        return FieldModel::reals();
    if (spec == "Q")
        return FieldModel::rationals();
    if (spec == "symbolic")
        return FieldModel::symbolic();
    throw ParseError("unknown field spec '" + std::string(spec) + "'");
}

std::string GroupValue::to_string() const
{
    std::vector<std::string> parts;
    if (!concrete.is_trivial())
        parts.push_back(concrete.to_string());
    if (kstar_copies == 1)
        parts.push_back("K*");
    else if (kstar_copies > 1)
        parts.push_back("(K*)^" + std::to_string(kstar_copies));
    for (const auto& d : mu)
        parts.push_back("mu_" + d.str() + "(K)");
    for (const auto& d : ext)
        parts.push_back(ext_infinite ? "(Z/" + d.str() + ")^(inf)" : "K*/(K*)^" + d.str());
    if (parts.empty())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out << (i ? " + " : "") << parts[i];
    return out.str();
}

GroupValue coefficient_value(const FgAbelianGroup& h, const FgAbelianGroup& source, const FieldModel& model)
{
    using Kind = FieldModel::Kind;
    GroupValue v;
    std::size_t free_part = 0;
    std::vector<Integer> concrete;
    const std::size_t r = h.free_rank();

    switch (model.kind)
    {
        case Kind::FiniteField:
        {
            const Integer order = model.parameter - 1;
            concrete.insert(concrete.end(), r, order);
            for (const auto& d : h.invariant_factors())
                concrete.push_back(gcd(d, order));
            for (const auto& d : source.invariant_factors())
                concrete.push_back(gcd(d, order));
            break;
        }
        case Kind::AlgClosedChar0:
            v.kstar_copies = r;
            concrete = h.invariant_factors();
            break;
        case Kind::AlgClosedCharP:
            v.kstar_copies = r;
            for (auto d : h.invariant_factors())
            {
                while (d % model.parameter == 0)
                    d /= model.parameter;
                concrete.push_back(d);
            }
            break;
        case Kind::Reals:
            v.kstar_copies = r;
            for (const auto& d : h.invariant_factors())
                concrete.push_back(gcd(d, 2));
            for (const auto& d : source.invariant_factors())
                concrete.push_back(gcd(d, 2));
            break;
        case Kind::Rationals:
            v.kstar_copies = r;
            for (const auto& d : h.invariant_factors())
                concrete.push_back(gcd(d, 2));
            for (const auto& d : source.invariant_factors())
            {
                concrete.push_back(gcd(d, 2));
                v.ext.push_back(d);
            }
            v.ext_infinite = !v.ext.empty();
            break;
        case Kind::Symbolic:
            v.kstar_copies = r;
            v.mu = h.invariant_factors();
            v.ext = source.invariant_factors();
            break;
        default:
            throw UnsupportedModel("no coefficient table for this field model");
    }
    v.concrete = FgAbelianGroup(free_part, std::move(concrete));
    return v;
}

FgAbelianGroup uct_cyclic(const FgAbelianGroup& h, const FgAbelianGroup& source, const Integer& m)
{
    std::vector<Integer> orders(h.free_rank(), m);
    for (const auto& d : h.invariant_factors())
        orders.push_back(gcd(d, m));
    for (const auto& d : source.invariant_factors())
        orders.push_back(gcd(d, m));
    return FgAbelianGroup(0, std::move(orders));
}

}   // namespace picloc
