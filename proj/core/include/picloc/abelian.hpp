#ifndef PICLOC_ABELIAN_HPP
#define PICLOC_ABELIAN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "picloc/integer_matrix.hpp"

/**
 * Exact integer linear algebra: Smith and Hermite normal forms, finitely
 * generated abelian groups, subgroups of Z^n, and cohomology of cochain
 * complexes of finitely generated abelian groups.
 *
 * Everything here is a pure function of its arguments.
 */
namespace picloc {

/**
 * A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with
 * d_1 | d_2 | ... | d_k and every d_i >= 2.
 *
 * The constructor accepts any list of cyclic orders and normalizes it into
 * invariant factors (orders 1 are dropped, order 0 counts as a free summand).
 */
class FgAbelianGroup
{
    public:
        FgAbelianGroup() = default;
        explicit FgAbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders = {});

        static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank); }
        static FgAbelianGroup cyclic(const Integer& order);

        std::size_t free_rank() const noexcept { return free_rank_; }
        const std::vector<Integer>& invariant_factors() const noexcept { return invariant_factors_; }

        bool is_trivial() const noexcept { return free_rank_ == 0 && invariant_factors_.empty(); }
        bool is_free() const noexcept { return invariant_factors_.empty(); }

        // "0", "Z", "Z^3", "Z/2", "Z^3 + Z/2 + Z/6"
        std::string to_string() const;

        friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

    private:
        std::size_t free_rank_ = 0;
        std::vector<Integer> invariant_factors_;
};

// Direct sum.
FgAbelianGroup operator+(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Normalizes a list of cyclic orders into invariant factors (drops 1s).
std::vector<Integer> invariant_factors_of(std::vector<Integer> orders);

/**
 * Row-style Hermite normal form of the row span of `rows`: upper echelon,
 * positive pivots, entries above each pivot reduced into [0, pivot).
 * Zero rows are dropped, so the result is a basis.
 */
IntMatrix hermite_normal_form(const IntMatrix& rows);

/**
 * A subgroup of Z^n, stored by its HNF row basis. Two subgroups are equal
 * iff their bases are equal.
 */
class Subgroup
{
    public:
        Subgroup() = default;
        explicit Subgroup(std::size_t ambient_rank);

        static Subgroup generated_by(std::size_t ambient_rank, const IntMatrix& generator_rows);
        static Subgroup full(std::size_t ambient_rank);

        std::size_t ambient_rank() const noexcept { return ambient_rank_; }
        std::size_t rank() const noexcept { return basis_.rows(); }
        const IntMatrix& basis() const noexcept { return basis_; }

        // Integer coefficients of v in the stored basis, if v lies in the subgroup.
        std::optional<std::vector<Integer>> coordinates(std::span<const Integer> v) const;
        bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }
        bool contains(const Subgroup& other) const;

        // Matrix (rank of `outer`) x (rank of this) whose columns express this
        // basis in the basis of `outer`. Throws NotInLattice if not a subgroup.
        IntMatrix inclusion_into(const Subgroup& outer) const;

        friend bool operator==(const Subgroup&, const Subgroup&) = default;

    private:
        std::size_t ambient_rank_ = 0;
        IntMatrix basis_;
};

/// Smith normal form U * A * V = D.
struct SmithForm
{
    IntMatrix left;      // U, unimodular, rows(A) x rows(A)
    IntMatrix diagonal;  // D
    IntMatrix right;     // V, unimodular, cols(A) x cols(A)
    std::size_t rank = 0;

    // Nonzero diagonal entries d_1 | d_2 | ... (all positive).
    std::vector<Integer> nonzero_diagonal() const;
};

/**
 * Smith normal form with smallest-absolute-value pivoting. Ties are broken
 * row-major, so U and V are deterministic.
 */
SmithForm smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Z^rows / (column span of a).
FgAbelianGroup cokernel(const IntMatrix& a);

// {x in Z^cols : a x = 0} and {a x : x in Z^cols}, as HNF subgroups.
Subgroup kernel_basis(const IntMatrix& a);
Subgroup image_basis(const IntMatrix& a);

/**
 * Cohomology of a complex of free groups
 *   C^0 --d^0--> C^1 --d^1--> ... --d^p--> C^{p+1}
 * given as the list of coboundary matrices (d^j is rank(C^{j+1}) x rank(C^j)).
 * Returns H^0 .. H^{p+1}. Throws CompositionNonzero if some d^{j+1} d^j != 0.
 */
std::vector<FgAbelianGroup> complex_cohomology(std::span<const IntMatrix> maps);

/**
 * Cohomology of a complex whose j-th group is Z^{n_j} modulo the diagonal
 * lattice given by `moduli[j]` (entry 0 means a free coordinate). The maps
 * must be well defined modulo those lattices, otherwise CompositionNonzero.
 */
std::vector<FgAbelianGroup> presented_complex_cohomology(std::span<const IntMatrix> maps,
                                                         const std::vector<std::vector<Integer>>& moduli);

/// Cohomology of `maps` tensored with Z/m.
std::vector<FgAbelianGroup> complex_cohomology_mod(std::span<const IntMatrix> maps, const Integer& m);

/**
 * Groups indexed by a contiguous range of degrees. Degrees outside the
 * stored range read as the trivial group.
 */
struct GradedGroups
{
    int first_degree = 0;
    std::vector<FgAbelianGroup> groups;

    const FgAbelianGroup& at(int degree) const;
    int end_degree() const { return first_degree + static_cast<int>(groups.size()); }
};

/**
 * A cochain complex of free groups starting in degree `first_degree`.
 * maps[i] goes from degree first_degree + i to first_degree + i + 1, so
 * maps.size() + 1 == ranks.size() (or both are empty).
 */
struct FreeCochainComplex
{
    int first_degree = 0;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> maps;

    bool empty() const { return ranks.empty(); }
};

GradedGroups cohomology(const FreeCochainComplex& complex);
GradedGroups cohomology_mod(const FreeCochainComplex& complex, const Integer& m);

// Sum over degrees of (-1)^j rank C^j.
long long euler_characteristic(const FreeCochainComplex& complex);

// Integer helpers.
Integer floor_div(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}   // namespace picloc

#endif
