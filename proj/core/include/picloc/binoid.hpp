#ifndef PICLOC_BINOID_HPP
#define PICLOC_BINOID_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "picloc/abelian.hpp"
#include "picloc/simplicial.hpp"

namespace picloc {

using ExponentVector = std::vector<Integer>;

/**
 * A finitely generated commutative binoid
 *   (x_1, ..., x_n | a_1 = b_1, ..., h_1 = inf, ...)
 * written additively: a congruence (a, b) means sum a_i x_i = sum b_i x_i,
 * an infinity h means sum h_i x_i is the absorbing element.
 */
struct BinoidPresentation
{
    std::vector<std::string> generators;
    std::vector<std::pair<ExponentVector, ExponentVector>> congruences;
    std::vector<ExponentVector> infinities;

    std::size_t size() const { return generators.size(); }

    // Throws ParseError on wrong lengths, negative entries or a = a.
    void validate() const;

    // "2x + y" (and "0" for the zero vector).
    std::string term_string(const ExponentVector& e) const;
};

/**
 * JSON: {"generators": [...], "congruences": [[a, b], ...], "infinities": [h, ...]}
 * with exponent vectors as integer arrays.
 *
 * Text: a line `generators: x y z`, then one relation per line such as
 * `x + y = 2z` or `2x + y = inf`. `#` starts a comment.
 *
 * read_binoid_file picks the JSON parser when the file starts with '{'.
 */
BinoidPresentation parse_binoid_json(std::string_view text);
BinoidPresentation parse_binoid_text(std::string_view text);
BinoidPresentation read_binoid_file(const std::string& path);

/**
 * Gamma = Z^n / span{a - b}, torsion-free. `projection` is the d x n
 * matrix sending exponent vectors to coordinates in Gamma.
 */
struct DifferenceGroup
{
    std::size_t rank = 0;
    IntMatrix projection;

    std::vector<Integer> project(std::span<const Integer> e) const { return projection.apply(e); }
    std::vector<Integer> generator_image(std::size_t i) const { return projection.column(i); }
};

/**
 * Throws NonIntegral if P has infinities, TorsionDetected if Gamma has
 * torsion and NonCancellative if some generator becomes zero in Gamma.
 */
DifferenceGroup difference_group(const BinoidPresentation& p);

/**
 * Whether the image of x_i lies in the smallest face of the cone spanned by
 * all generator images that contains the image of f.
 */
bool minimal_face_contains(const BinoidPresentation& p, const ExponentVector& f, std::size_t i);
bool minimal_face_contains(const DifferenceGroup& gamma, std::span<const Integer> f, std::size_t i);

// Generators that are units of M (their negatives lie in the cone).
std::vector<std::size_t> unit_generators(const DifferenceGroup& gamma);

/**
 * The unit group of a localization. `zero_value` marks the Zero value of a
 * non-face; otherwise `group` is a subgroup of Gamma or of Z^F.
 */
struct UnitGroupValue
{
    bool zero_value = false;
    Subgroup group;

    static UnitGroupValue zero() { return {true, Subgroup{}}; }
    bool is_zero() const { return zero_value || group.rank() == 0; }
};

// Units of M localized at x_F: span of the generators in the minimal face of x_F.
UnitGroupValue localization_unit_group(const BinoidPresentation& p, const std::vector<std::size_t>& f);
UnitGroupValue localization_unit_group(const DifferenceGroup& gamma, const std::vector<std::size_t>& f);

// Z^F if F is a face of K, Zero otherwise.
UnitGroupValue simplicial_unit_sheaf_value(const SimplicialComplex& k, const Face& f);

// No congruences, infinities = minimal non-faces (squarefree).
BinoidPresentation simplicial_binoid_of(const SimplicialComplex& k);

struct NotSimplicial
{
    std::string reason;
};

/**
 * The complex {F : x_F != inf} when P is semifree (no congruences) and its
 * infinity ideal is reduced; otherwise the reason it is not simplicial.
 */
std::variant<SimplicialComplex, NotSimplicial> detect_simplicial(const BinoidPresentation& p);

/**
 * Compares the unit sheaf values of P and of its reduction on every subset
 * of generators. Integral presentations are trivially fine; presentations
 * with both congruences and infinities throw UnsupportedPresentation.
 */
bool units_equal_reduction_check(const BinoidPresentation& p);

}   // namespace picloc

#endif
