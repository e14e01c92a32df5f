#include <algorithm>
#include <cassert>
#include <sstream>

#include "picloc/abelian.hpp"
#include "picloc/errors.hpp"

namespace picloc {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::vector<Integer> invariant_factors_of(std::vector<Integer> orders)
{
    for (auto& d : orders)
        d = boost::multiprecision::abs(d);
    std::erase_if(orders, [](const Integer& d) { return d == 1 || d == 0; });

    // Pairwise (gcd, lcm) replacement: after pass i, orders[i] divides every later entry.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
        {
            Integer g = gcd(orders[i], orders[j]);
            Integer l = orders[i] / g * orders[j];
            orders[i] = g;
            orders[j] = l;
        }
    std::erase_if(orders, [](const Integer& d) { return d == 1; });
    return orders;
}

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders)
    : free_rank_(free_rank)
{
    for (const auto& d : cyclic_orders)
        if (d == 0)
            ++free_rank_;
    invariant_factors_ = invariant_factors_of(std::move(cyclic_orders));
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order)
{
    return FgAbelianGroup(0, {order});
}

std::string FgAbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank_ > 0)
    {
        out << 'Z';
        if (free_rank_ > 1)
            out << '^' << free_rank_;
        first = false;
    }
    for (const auto& d : invariant_factors_)
    {
        if (!first)
            out << " + ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

FgAbelianGroup operator+(const FgAbelianGroup& a, const FgAbelianGroup& b)
{
    std::vector<Integer> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgAbelianGroup(a.free_rank() + b.free_rank(), std::move(orders));
}

IntMatrix hermite_normal_form(const IntMatrix& rows)
{
    IntMatrix h = rows;
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c)
    {
        bool has_pivot = false;
        while (true)
        {
            // Smallest nonzero |h(i, c)| among rows r.. becomes the pivot.
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c))))
                    best = i;
            if (best == m)
                break;
            has_pivot = true;
            h.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i)
            {
                if (h(i, c) == 0)
                    continue;
                h.add_row_multiple(i, r, -(h(i, c) / h(r, c)));
                if (h(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!has_pivot)
            continue;
        if (h(r, c) < 0)
            h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i)
            h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
        ++r;
    }

    IntMatrix basis(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < n; ++c)
            basis(i, c) = h(i, c);
    return basis;
}

Subgroup::Subgroup(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank)
{
}

Subgroup Subgroup::generated_by(std::size_t ambient_rank, const IntMatrix& generator_rows)
{
    assert(generator_rows.cols() == ambient_rank);
    Subgroup s(ambient_rank);
    s.basis_ = hermite_normal_form(generator_rows);
    return s;
}

Subgroup Subgroup::full(std::size_t ambient_rank)
{
    Subgroup s(ambient_rank);
    s.basis_ = IntMatrix::identity(ambient_rank);
    return s;
}

std::optional<std::vector<Integer>> Subgroup::coordinates(std::span<const Integer> v) const
{
    assert(v.size() == ambient_rank_);
    std::vector<Integer> residual(v.begin(), v.end());
    std::vector<Integer> x(rank());
    std::size_t col = 0;
    for (std::size_t i = 0; i < rank(); ++i)
    {
        while (basis_(i, col) == 0)
            ++col;
        const Integer& pivot = basis_(i, col);
        if (residual[col] % pivot != 0)
            return std::nullopt;
        x[i] = residual[col] / pivot;
        if (x[i] != 0)
            for (std::size_t c = col; c < ambient_rank_; ++c)
                residual[c] -= x[i] * basis_(i, c);
    }
    for (const auto& r : residual)
        if (r != 0)
            return std::nullopt;
    return x;
}

bool Subgroup::contains(const Subgroup& other) const
{
    if (other.ambient_rank_ != ambient_rank_)
        return false;
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

IntMatrix Subgroup::inclusion_into(const Subgroup& outer) const
{
    IntMatrix m(outer.rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
    {
        auto coords = outer.coordinates(basis_.row(i));
        if (!coords)
            throw NotInLattice("basis vector " + std::to_string(i) + " is not in the target subgroup");
        for (std::size_t k = 0; k < outer.rank(); ++k)
            m(k, i) = (*coords)[k];
    }
    return m;
}

const FgAbelianGroup& GradedGroups::at(int degree) const
{
    static const FgAbelianGroup trivial;
    if (degree < first_degree || degree >= end_degree())
        return trivial;
    return groups[static_cast<std::size_t>(degree - first_degree)];
}

}   // namespace picloc
