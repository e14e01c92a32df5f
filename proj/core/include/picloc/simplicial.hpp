#ifndef PICLOC_SIMPLICIAL_HPP
#define PICLOC_SIMPLICIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "picloc/abelian.hpp"
#include "picloc/field_model.hpp"

namespace picloc {

// Sorted list of vertex indices.
using Face = std::vector<std::size_t>;

/**
 * A finite abstract simplicial complex on an ordered, labeled vertex set.
 *
 * Two degenerate complexes are representable: VOID has no faces at all,
 * IRRELEVANT has only the empty face. Faces are closed downward from the
 * stored facets; redundant facets are removed on construction.
 */
class SimplicialComplex
{
    public:
        SimplicialComplex() = default;

        /**
         * Builds the complex generated by `facets` on `vertices`. If `vertices`
         * is empty the vertex order is the order of first appearance.
         *
         * Throws UnknownVertex for a facet member missing from a nonempty
         * vertex list, and UncoveredVertex for a listed vertex that lies in no
         * facet. An empty facet list (and no vertices) gives IRRELEVANT.
         */
        static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                             const std::vector<std::vector<std::string>>& facets);

        /**
         * Index-based construction without the singleton requirement (links
         * and restrictions use this). Labels default to "0", "1", ... and an
         * empty facet list gives VOID.
         */
        static SimplicialComplex from_index_facets(std::size_t vertex_count, std::vector<Face> facets,
                                                   std::vector<std::string> labels = {});

        static SimplicialComplex void_complex(std::vector<std::string> labels = {});
        static SimplicialComplex irrelevant(std::vector<std::string> labels = {});

        std::size_t vertex_count() const noexcept { return labels_.size(); }
        const std::vector<std::string>& labels() const noexcept { return labels_; }
        const std::string& label(std::size_t v) const { return labels_[v]; }

        const std::vector<Face>& facets() const noexcept { return facets_; }

        bool is_void() const noexcept { return void_; }
        bool is_irrelevant() const noexcept { return !void_ && facets_.size() == 1 && facets_[0].empty(); }

        // -1 for IRRELEVANT and VOID.
        int dim() const noexcept { return void_ ? -1 : static_cast<int>(faces_by_size_.size()) - 2; }

        // Faces with exactly k vertices, in lexicographic order (k = 0 is the empty face).
        const std::vector<Face>& faces_of_size(std::size_t k) const;
        std::size_t face_count() const;

        bool contains(const Face& f) const;
        bool is_vertex_used(std::size_t v) const;   // {v} is a face

        // Number of vertices v with {v} a facet.
        std::size_t isolated_vertex_count() const;
        std::size_t connected_components() const;   // over the vertices that are faces
        std::vector<std::size_t> vertex_degrees() const;   // number of edges at each vertex

        // "{x,y}" using labels.
        std::string face_string(const Face& f) const;

        friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
        {
            return a.void_ == b.void_ && a.labels_ == b.labels_ && a.facets_ == b.facets_;
        }

    private:
        void close();

        std::vector<std::string> labels_;
        std::vector<Face> facets_;
        std::vector<std::vector<Face>> faces_by_size_;
        bool void_ = false;
};

/**
 * The complex on `vertex_count` vertices whose faces are the sets containing
 * none of `non_faces`. Vertices that are themselves non-faces stay in the
 * vertex list but are unused.
 */
SimplicialComplex complex_avoiding(std::size_t vertex_count, const std::vector<Face>& non_faces,
                                   std::vector<std::string> labels = {});

/**
 * lk_K(F) on the vertex set V \ F (labels preserved). If F is a facet the
 * result is IRRELEVANT. Throws NotAFace.
 */
SimplicialComplex link(const SimplicialComplex& k, const Face& f);

// {G in K : G subset of W}, on the vertex set W (labels preserved).
SimplicialComplex restriction(const SimplicialComplex& k, const Face& w);

/**
 * Simplicial cochain complex of K with integer coefficients. The basis of
 * degree j is the list of faces of dimension j in lexicographic order; the
 * reduced complex starts in degree -1 with the empty face.
 */
struct CochainComplexZ
{
    bool reduced = false;
    std::vector<std::vector<Face>> basis;   // basis[i] belongs to degree complex.first_degree + i
    FreeCochainComplex complex;
};

// Throws VoidComplex for a reduced complex of VOID.
CochainComplexZ cochain_complex(const SimplicialComplex& k, bool reduced);

/**
 * Integral cohomology. Reduced cohomology of VOID is zero in every degree;
 * reduced cohomology of IRRELEVANT is Z in degree -1.
 */
GradedGroups cohomology_Z(const SimplicialComplex& k, bool reduced);

// Unreduced integral homology H_0 .. H_dim.
GradedGroups homology_Z(const SimplicialComplex& k);

struct CyclicCoefficients
{
    Integer m;
};

using Coefficients = std::variant<FieldModel, CyclicCoefficients>;

/**
 * Unreduced cohomology H^0 .. H^dim with coefficients in K* for a field
 * model (assembled from integral homology) or in Z/m (computed directly
 * from the cochains mod m). Throws VoidComplex for VOID.
 */
std::vector<GroupValue> cohomology_with_coefficients(const SimplicialComplex& k, const Coefficients& coefficients);

/**
 * Facet file: one facet per line, whitespace-separated labels, `#` starts a
 * comment, and an optional first line `vertices: a b c ...` fixes the
 * vertex order. Throws ParseError on malformed text.
 */
SimplicialComplex parse_facet_text(std::string_view text);
SimplicialComplex read_facet_file(const std::string& path);

}   // namespace picloc

#endif
