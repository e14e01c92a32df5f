#ifndef PICLOC_INTEGER_MATRIX_HPP
#define PICLOC_INTEGER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace picloc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Dense matrix of arbitrary-precision integers, row-major.
 *
 * Linear maps act on column vectors: a map Z^m -> Z^n is an n x m matrix.
 * Zero-sized dimensions are allowed and common (maps into or out of the
 * trivial group).
 */
class IntMatrix
{
    public:
        IntMatrix() = default;
        IntMatrix(std::size_t rows, std::size_t cols);

        static IntMatrix identity(std::size_t n);
        static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
        static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
        static IntMatrix diagonal(const std::vector<Integer>& entries);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
        std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
        std::vector<Integer> column(std::size_t c) const;

        IntMatrix transpose() const;
        bool is_zero() const;

        // Elementary operations used by the normal-form routines.
        void swap_rows(std::size_t a, std::size_t b);
        void swap_cols(std::size_t a, std::size_t b);
        void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);   // row dst += k * row src
        void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);   // col dst += k * col src
        void negate_row(std::size_t r);
        void negate_col(std::size_t c);

        IntMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
        std::vector<Integer> apply(std::span<const Integer> x) const;

        // Reduce every entry into [0, m).
        IntMatrix reduced_mod(const Integer& m) const;

        // One row per line, space-separated decimal integers.
        std::string dump() const;
        static IntMatrix parse_dump(std::string_view text, std::size_t cols);

        friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);

// Horizontal / vertical concatenation; dimensions must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

// Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const Integer& x);

}   // namespace picloc

#endif
