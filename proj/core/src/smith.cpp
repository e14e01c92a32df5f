#include <cassert>

#include "picloc/abelian.hpp"

namespace picloc {

namespace {

using boost::multiprecision::abs;

struct Position
{
    std::size_t row;
    std::size_t col;
};

// Smallest nonzero |d(i, j)| over i, j >= t, first in row-major order on ties.
std::optional<Position> smallest_entry(const IntMatrix& d, std::size_t t)
{
    std::optional<Position> best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
            if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->row, best->col))))
                best = Position{i, j};
    return best;
}

// Smallest nonzero entry restricted to row t and column t.
Position smallest_in_cross(const IntMatrix& d, std::size_t t)
{
    Position best{t, t};
    for (std::size_t i = t; i < d.rows(); ++i)
        if (d(i, t) != 0 && (d(best.row, best.col) == 0 || abs(d(i, t)) < abs(d(best.row, best.col))))
            best = Position{i, t};
    for (std::size_t j = t; j < d.cols(); ++j)
        if (d(t, j) != 0 && (d(best.row, best.col) == 0 || abs(d(t, j)) < abs(d(best.row, best.col))))
            best = Position{t, j};
    return best;
}

}   // namespace

std::vector<Integer> SmithForm::nonzero_diagonal() const
{
    std::vector<Integer> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(diagonal(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
    IntMatrix& d = s.diagonal;
    IntMatrix& u = s.left;
    IntMatrix& v = s.right;

    auto move_to_pivot = [&](std::size_t t, Position p) {
        d.swap_rows(t, p.row);
        u.swap_rows(t, p.row);
        d.swap_cols(t, p.col);
        v.swap_cols(t, p.col);
    };

    std::size_t t = 0;
    for (; t < m && t < n; ++t)
    {
        auto pivot = smallest_entry(d, t);
        if (!pivot)
            break;
        move_to_pivot(t, *pivot);

        while (true)
        {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
            {
                if (d(i, t) == 0)
                    continue;
                Integer q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j)
            {
                if (d(t, j) == 0)
                    continue;
                Integer q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
            {
                move_to_pivot(t, smallest_in_cross(d, t));
                continue;
            }

            // Row and column t are clear; the pivot must divide the rest.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < m && !offending; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0)
                    {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            d.add_row_multiple(t, *offending, 1);
            u.add_row_multiple(t, *offending, 1);
        }

        if (d(t, t) < 0)
        {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    s.rank = t;
    return s;
}

std::size_t rank(const IntMatrix& a)
{
    // Fraction-free elimination is enough for the rank.
    IntMatrix d = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d.cols() && r < d.rows(); ++c)
    {
        std::size_t p = r;
        while (p < d.rows() && d(p, c) == 0)
            ++p;
        if (p == d.rows())
            continue;
        d.swap_rows(r, p);
        for (std::size_t i = r + 1; i < d.rows(); ++i)
        {
            if (d(i, c) == 0)
                continue;
            Integer g = gcd(d(r, c), d(i, c));
            Integer f_i = d(r, c) / g;
            Integer f_r = d(i, c) / g;
            for (std::size_t k = c; k < d.cols(); ++k)
                d(i, k) = f_i * d(i, k) - f_r * d(r, k);
        }
        ++r;
    }
    return r;
}

FgAbelianGroup cokernel(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    return FgAbelianGroup(a.rows() - s.rank, s.nonzero_diagonal());
}

Subgroup kernel_basis(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    const std::size_t n = a.cols();
    IntMatrix gens(n - s.rank, n);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            gens(j - s.rank, i) = s.right(i, j);
    return Subgroup::generated_by(n, gens);
}

Subgroup image_basis(const IntMatrix& a)
{
    return Subgroup::generated_by(a.rows(), a.transpose());
}

}   // namespace picloc
