#ifndef PICLOC_MONOMIAL_HPP
#define PICLOC_MONOMIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "picloc/binoid.hpp"
#include "picloc/field_model.hpp"
#include "picloc/picard.hpp"
#include "picloc/simplicial.hpp"

namespace picloc {

/**
 * A monomial ideal in K[X_1, ..., X_n] by its minimal generators. The
 * constructor drops generators divisible by another one.
 */
class MonomialIdeal
{
    public:
        MonomialIdeal() = default;
        // Throws ParseError on wrong lengths, negative entries or the unit monomial.
        MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators, std::vector<std::string> variables = {});

        std::size_t variable_count() const noexcept { return n_; }
        const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
        const std::vector<std::string>& variables() const noexcept { return variables_; }

        bool is_squarefree() const;

        // The squarefree ideal generated by the supports of the generators.
        MonomialIdeal radical() const;

        // Variables X_i with a pure power in the ideal.
        std::vector<std::size_t> nilpotent_variables() const;

        friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    private:
        std::size_t n_ = 0;
        std::vector<ExponentVector> generators_;
        std::vector<std::string> variables_;
};

/**
 * The complex of the radical: faces F with X_F outside the radical, on the
 * variables that are not nilpotent. The zero ideal gives the full simplex.
 */
SimplicialComplex reduction_complex(const MonomialIdeal& ideal);

struct DegreeBox
{
    std::vector<long long> lower;
    std::vector<long long> upper;
};

// "lo:hi" for every variable, or "lo:hi,lo:hi,..." per variable.
DegreeBox parse_degree_box(std::string_view spec, std::size_t n);

struct NilpotentEntry
{
    std::vector<long long> degree;
    std::vector<std::size_t> dimensions;   // dim H^j for j = 0 .. n-1
};

/**
 * For each multidegree a in the box (in lexicographic order), the
 * dimensions of the degree-a part of H^j of the Cech complex of I_red / I on
 * the cover {D(X_i)}. Throws CharPUnsupported for models of positive
 * characteristic.
 */
std::vector<NilpotentEntry> nilpotent_cech_dimensions(const MonomialIdeal& ideal, const DegreeBox& box,
                                                      const FieldModel& model);

// Dimension (0 or 1) of the degree-a part of (I_red / I) localized at X_F.
bool nilpotent_chart_nonzero(const MonomialIdeal& ideal, const Face& f, std::span<const long long> a);

struct NonreducedReport
{
    CohomologyReport reduced;   // from the reduction complex
    std::vector<std::string> removed_variables;
    std::vector<NilpotentEntry> nilpotent;
};

NonreducedReport nonreduced_report(const MonomialIdeal& ideal, const FieldModel& model, const DegreeBox& box);

/**
 * Ideal file: one generator per line as space-separated exponents, `#`
 * comments, optional first line `variables: X Y Z`.
 */
MonomialIdeal parse_ideal_text(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);

}   // namespace picloc

#endif
