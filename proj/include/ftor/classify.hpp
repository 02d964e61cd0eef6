#ifndef FTOR_CLASSIFY_HPP
#define FTOR_CLASSIFY_HPP

#include <string>

#include "ftor/complex.hpp"
#include "ftor/graph.hpp"
#include "ftor/homology.hpp"

namespace ftor {

struct SurfaceReport {
    bool is_pure_2d = false;
    bool is_closed_surface = false;  // every edge in two triangles, vertex links single cycles
    bool orientable = false;         // meaningful only when is_closed_surface
    int euler = 0;
    bool connected = false;

    bool is_projective_plane() const {
        return is_closed_surface && connected && !orientable && euler == 1;
    }
};

enum class ClassLabel {
    RP2_HOMEOMORPHIC,
    COLLAPSES_TO_RP2,
    RP2_WEDGE_S1_HOMOLOGY,
    OTHER,
};

std::string label_name(ClassLabel label);

// Closed-surface recognition for a 2-dimensional complex: edge degrees,
// vertex links, connectivity, Euler characteristic, and orientability via
// orientation propagation across shared edges.
SurfaceReport surface_check(const SimplicialComplex& c);

// Elementary collapses, lexicographically smallest free face first, until
// no free face remains. Deterministic; preserves the homotopy type.
SimplicialComplex greedy_collapse(const SimplicialComplex& c);

// Priority order: homeomorphic to the projective plane; collapsing to it
// under the greedy schedule; carrying the Z + Z/2, 0 homology signature of
// RP2 wedge a circle; anything else.
ClassLabel classify_complex(const Graph& g);

}  // namespace ftor

#endif
