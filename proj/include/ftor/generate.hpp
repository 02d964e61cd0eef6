#ifndef FTOR_GENERATE_HPP
#define FTOR_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ftor/graph.hpp"

namespace ftor {

using GraphSink = std::function<void(const Graph&)>;

struct GenSummary {
    std::uint64_t emitted = 0;

    GenSummary& operator+=(const GenSummary& o) {
        emitted += o.emitted;
        return *this;
    }
};

// Isomorph-free generation by canonical augmentation: each parent on k
// vertices is extended by one new vertex over admissible neighbor masks in
// ascending order, and a child is kept iff the new vertex lies in the orbit
// of the canonical deletion vertex. Exactly one representative per
// isomorphism class is emitted; order is deterministic for a fixed build.
//
// Degree bounds: dmax is enforced during extension, dmin and (for the
// connected variant) connectivity only at full size. Degenerate bounds give
// an empty stream.
GenSummary generate_connected(int n, int dmin, int dmax, const GraphSink& sink);

// Same augmentation without the connectivity restriction (neighbor mask may
// be empty, deletion vertex unrestricted): all graphs up to isomorphism.
GenSummary generate_all(int n, int dmin, int dmax, const GraphSink& sink);

// Subtree expansion for parallel runs: the descendants at level n of one
// seed graph. Seeds at a fixed level partition the leaves, so summaries
// merge by summation. `seed` must itself be a generated representative.
GenSummary expand_connected_subtree(const Graph& seed, int n, int dmin, int dmax,
                                    const GraphSink& sink);

// Connected seed graphs on s vertices compatible with dmax, in generation
// order (dmin is not applied at seed level).
std::vector<Graph> connected_seeds(int s, int dmax);

}  // namespace ftor

#endif
