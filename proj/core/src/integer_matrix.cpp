#include "picloc/integer_matrix.hpp"

#include <cassert>
#include <sstream>

#include "picloc/errors.hpp"

namespace picloc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    IntMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows)
    {
        assert(row.size() == cols);
        std::size_t c = 0;
        for (long long x : row)
            m(r, c++) = x;
        ++r;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        assert(rows[r].size() == cols);
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries)
{
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const
{
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
    {
        const Integer& s = (*this)(src, c);
        if (s != 0)
            (*this)(dst, c) += k * s;
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
    {
        const Integer& s = (*this)(r, src);
        if (s != 0)
            (*this)(r, dst) += k * s;
    }
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const
{
    IntMatrix m(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i)
        for (std::size_t j = 0; j < col_ids.size(); ++j)
            m(i, j) = (*this)(row_ids[i], col_ids[j]);
    return m;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> x) const
{
    assert(x.size() == cols_);
    std::vector<Integer> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && x[c] != 0)
                y[r] += (*this)(r, c) * x[c];
    return y;
}

IntMatrix IntMatrix::reduced_mod(const Integer& m) const
{
    IntMatrix out = *this;
    for (auto& x : out.data_)
    {
        x %= m;
        if (x < 0)
            x += m;
    }
    return out;
}

std::string IntMatrix::dump() const
{
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
        {
            if (c)
                out << ' ';
            out << (*this)(r, c);
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix IntMatrix::parse_dump(std::string_view text, std::size_t cols)
{
    std::vector<std::vector<Integer>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line))
    {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        std::vector<Integer> row;
        std::string tok;
        while (ls >> tok)
        {
            try
            {
                row.emplace_back(tok);
            }
            catch (const std::exception&)
            {
                throw ParseError("matrix dump: not an integer: '" + tok + "'");
            }
        }
        if (row.size() != cols)
            throw ParseError("matrix dump: expected " + std::to_string(cols) + " entries per row");
        rows.push_back(std::move(row));
    }
    return from_rows(rows, cols);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    assert(a.cols() == b.rows());
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a)
{
    IntMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (auto& x : out.row(r))
            x *= k;
    return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b)
{
    assert(a.rows() == b.rows());
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
    {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b)
{
    assert(a.cols() == b.cols());
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(a.rows() + r, c) = b(r, c);
    return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
        {
            if (a(i, j) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

std::string to_string(const Integer& x)
{
    return x.str();
}

}   // namespace picloc
