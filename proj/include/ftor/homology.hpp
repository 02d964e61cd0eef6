#ifndef FTOR_HOMOLOGY_HPP
#define FTOR_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "ftor/complex.hpp"
#include "ftor/graph.hpp"

namespace ftor {

// H_k = Z^betti + Z/d1 + Z/d2 + ... with d1 | d2 | ..., each di >= 2.
struct HomologyGroup {
    long long betti = 0;
    std::vector<long long> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool has_torsion() const { return !torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;

    std::string to_string() const;  // e.g. "Z^2 + Z/2"
};

// Integral homology via Smith normal form of the boundary maps.
HomologyGroup homology(const SimplicialComplex& c, int k);

// H_1 of the clique complex of g, computed on the 2-truncation (maximal
// faces the triangles); equal to the untruncated H_1. Connectivity supplies
// rank d1 directly, so the only Smith reduction is of d2.
HomologyGroup h1_clique(const Graph& g);

bool has_h1_torsion(const Graph& g);
bool h1_nontrivial(const Graph& g);

}  // namespace ftor

#endif
