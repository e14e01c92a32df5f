#ifndef PICLOC_CECH_HPP
#define PICLOC_CECH_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "picloc/abelian.hpp"
#include "picloc/binoid.hpp"
#include "picloc/simplicial.hpp"

namespace picloc {

/**
 * Unit groups on the coordinate cover {D(x_1), ..., D(x_n)}.
 *
 * `value(F)` is the group on D(x_F) for a nonempty index set F, and
 * `restrict(F, G)` for F inside G (both nonzero) is the matrix of
 * value(F) -> value(G) in the stored bases. `candidates(k)`, when set, lists
 * the only k-element sets whose value may be nonzero, which avoids
 * enumerating every subset.
 */
struct UnitSheafModel
{
    std::size_t n = 0;
    std::function<UnitGroupValue(const Face&)> value;
    std::function<IntMatrix(const Face&, const Face&)> restrict;
    std::function<std::vector<Face>(std::size_t)> candidates;
};

struct CechBlock
{
    Face face;
    std::size_t rank = 0;
};

/**
 * Cech cochain complex in degrees 0 .. n-1. Degree p has one block per
 * (p+1)-element index set with a nonzero group, in lexicographic order.
 * When `moduli` is nonempty, moduli[p][i] is the order of coordinate i of
 * C^p (0 for a free coordinate).
 */
struct CechComplex
{
    std::vector<std::vector<CechBlock>> blocks;
    std::vector<IntMatrix> coboundaries;
    std::vector<std::vector<Integer>> moduli;

    std::size_t degree_count() const { return blocks.size(); }
    std::size_t rank(std::size_t p) const;
    std::vector<std::size_t> ranks() const;

    // Per degree: the face list, then the coboundary in the matrix dump format.
    std::string dump(const std::vector<std::string>& labels = {}) const;
};

/**
 * Assembles the complex; the block of (F, G = F + {i}) is (-1)^k restrict(F, G)
 * with k the position of i in G. Throws RestrictionIncoherent if identities
 * or compositions along chains F < G < H fail.
 */
CechComplex build_cech_complex(const UnitSheafModel& model);

// H^0 .. H^{n-1}.
std::vector<FgAbelianGroup> cech_cohomology(const CechComplex& c);

/**
 * The Cech complex of the constant sheaf G on the cover of the simplicial
 * binoid of K: G at every face, 0 at non-faces.
 */
CechComplex constant_sheaf_complex(const SimplicialComplex& k, const FgAbelianGroup& g);

// Z^F on faces with coordinate inclusions.
UnitSheafModel simplicial_unit_model(const SimplicialComplex& k);

// The summand of the simplicial model spanned by the coordinate of vertex v.
UnitSheafModel simplicial_vertex_model(const SimplicialComplex& k, std::size_t v);

/**
 * Localization unit groups of an integral binoid on the cover by the
 * generators listed in `cover` (indices into the presentation). Values are
 * computed lazily and cached inside the model.
 */
UnitSheafModel integral_binoid_model(const DifferenceGroup& gamma, const std::vector<std::size_t>& cover);

}   // namespace picloc

#endif
