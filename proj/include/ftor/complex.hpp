#ifndef FTOR_COMPLEX_HPP
#define FTOR_COMPLEX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ftor/graph.hpp"
#include "ftor/snf.hpp"

namespace ftor {

// Compare faces as sorted vertex tuples (shorter prefix first). For equal
// cardinality this is the order used to index boundary matrices.
bool tuple_lex_less(VertexSet a, VertexSet b);

// Facet-list presentation of a simplicial complex on vertices < n. A vertex
// belongs to the complex iff it appears in a facet, so isolated vertices are
// carried as singleton facets. Facets are inclusion-maximal, deduplicated
// and tuple-lex sorted.
struct SimplicialComplex {
    int n = 0;
    std::vector<VertexSet> facets;

    bool operator==(const SimplicialComplex&) const = default;
};

// Normalizes an arbitrary face list: drops faces contained in others,
// deduplicates, sorts.
SimplicialComplex make_complex(int n, std::vector<VertexSet> faces);

int dimension(const SimplicialComplex& c);

// All k-faces in tuple-lex order.
std::vector<VertexSet> faces_of_dim(const SimplicialComplex& c, int k);

// Faces are the cliques of g with at most max_dim+1 vertices; max_dim < 0
// means no truncation. Facets come out inclusion-maximal among those.
SimplicialComplex clique_complex(const Graph& g, int max_dim = -1);

// Boundary map from k-faces to (k-1)-faces over the tuple-lex bases,
// alternating signs. Requires k >= 1.
IntMatrix boundary_matrix(int k, const SimplicialComplex& c);

// One facet per line, space-separated vertex indices.
void save_facets(const SimplicialComplex& c, const std::string& path);
SimplicialComplex load_facets(const std::string& path);
SimplicialComplex read_facets(std::istream& in);

}  // namespace ftor

#endif
