#include "picloc/cone.hpp"

#include <cassert>
#include <set>
#include <tuple>

#include "picloc/abelian.hpp"

namespace picloc {

namespace {

// a . y + b >= 0, or > 0 when strict. Integer coefficients, primitive.
struct Inequality
{
    std::vector<Integer> a;
    Integer b;
    bool strict = false;

    bool operator<(const Inequality& o) const { return std::tie(a, b, strict) < std::tie(o.a, o.b, o.strict); }
};

Inequality normalized(const std::vector<Rational>& a, const Rational& b, bool strict)
{
    Integer den = 1;
    auto absorb = [&](const Rational& q) { den = lcm(den, boost::multiprecision::denominator(q)); };
    for (const auto& q : a)
        absorb(q);
    absorb(b);

    Inequality out;
    out.strict = strict;
    Integer g = 0;
    for (const auto& q : a)
    {
        Integer v = boost::multiprecision::numerator(q) * (den / boost::multiprecision::denominator(q));
        g = gcd(g, v);
        out.a.push_back(std::move(v));
    }
    out.b = boost::multiprecision::numerator(b) * (den / boost::multiprecision::denominator(b));
    g = gcd(g, out.b);
    if (g > 1)
    {
        for (auto& v : out.a)
            v /= g;
        out.b /= g;
    }
    return out;
}

bool is_constant(const Inequality& q)
{
    for (const auto& v : q.a)
        if (v != 0)
            return false;
    return true;
}

bool constant_holds(const Inequality& q)
{
    return q.strict ? q.b > 0 : q.b >= 0;
}

}   // namespace

bool strictly_feasible(const IntMatrix& g, std::span<const Integer> x, std::span<const Integer> f)
{
    const std::size_t d = g.rows();
    const std::size_t n = g.cols();
    const std::size_t m = n + 1;   // variables lambda_1..lambda_n, epsilon
    assert(x.size() == d && f.size() == d);

    // Augmented system [g | x | f] over Q, brought to reduced row echelon form.
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < d; ++r)
    {
        for (std::size_t c = 0; c < n; ++c)
            rows[r][c] = g(r, c);
        rows[r][n] = x[r];
        rows[r][m] = f[r];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < d; ++c)
    {
        std::size_t p = rank;
        while (p < d && rows[p][c] == 0)
            ++p;
        if (p == d)
            continue;
        std::swap(rows[rank], rows[p]);
        const Rational inv = 1 / rows[rank][c];
        for (auto& v : rows[rank])
            v *= inv;
        for (std::size_t r = 0; r < d; ++r)
        {
            if (r == rank || rows[r][c] == 0)
                continue;
            const Rational k = rows[r][c];
            for (std::size_t j = c; j <= m; ++j)
                rows[r][j] -= k * rows[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < d; ++r)
        if (rows[r][m] != 0)
            return false;

    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    const std::size_t t = free_cols.size();

    // Sign constraints on every variable, written in the free variables.
    std::set<Inequality> system;
    auto add = [&](const std::vector<Rational>& a, const Rational& b, bool strict) {
        system.insert(normalized(a, b, strict));
    };
    for (std::size_t i = 0; i < rank; ++i)
    {
        // y_pivot = rhs - sum_k rows[i][free_k] * y_free_k
        std::vector<Rational> a(t);
        for (std::size_t k = 0; k < t; ++k)
            a[k] = -rows[i][free_cols[k]];
        add(a, rows[i][m], pivot_cols[i] == n);
    }
    for (std::size_t k = 0; k < t; ++k)
    {
        std::vector<Rational> a(t);
        a[k] = 1;
        add(a, 0, free_cols[k] == n);
    }

    for (std::size_t var = 0; var < t; ++var)
    {
        std::vector<Inequality> pos, neg;
        std::set<Inequality> next;
        for (const auto& q : system)
        {
            if (q.a[var] > 0)
                pos.push_back(q);
            else if (q.a[var] < 0)
                neg.push_back(q);
            else
                next.insert(q);
        }
        for (const auto& p : pos)
            for (const auto& q : neg)
            {
                const Integer& cp = p.a[var];
                const Integer cq = -q.a[var];
                std::vector<Rational> a(t);
                for (std::size_t k = 0; k < t; ++k)
                    a[k] = Rational(cq * p.a[k] + cp * q.a[k]);
                next.insert(normalized(a, Rational(cq * p.b + cp * q.b), p.strict || q.strict));
            }
        system.clear();
        for (const auto& q : next)
        {
            if (is_constant(q))
            {
                if (!constant_holds(q))
                    return false;
                continue;
            }
            system.insert(q);
        }
    }
    for (const auto& q : system)
        if (!constant_holds(q))
            return false;
    return true;
}

}   // namespace picloc
