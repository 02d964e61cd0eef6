#ifndef FTOR_POSET_HPP
#define FTOR_POSET_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "ftor/graph.hpp"

namespace ftor {

// Finite poset as upset masks: leq[x] = { y : x <= y }, including x.
struct Poset {
    int n = 0;
    std::array<VertexSet, kMaxVertices> leq{};

    bool le(int x, int y) const { return (leq[x] >> y) & 1u; }
    VertexSet downset(int x) const;  // { y : y <= x }
    VertexSet upper_covers(int x) const;

    bool operator==(const Poset&) const = default;
};

Poset chain_poset(int n);
Poset antichain_poset(int n);

// Reflexivity, antisymmetry, transitivity on the masks.
bool check_poset_invariants(const Poset& p);

// Edge between every two distinct comparable elements; the order complex
// of p is the clique complex of this graph.
Graph comparability_graph(const Poset& p);

// The certificate that a graph is not a comparability graph: an induced
// 5-cycle (comparability graphs have no induced odd cycle above length 3).
bool obstructs_comparability(const Graph& g);

// Relabeling-invariant key: the lexicographically least permuted relation
// matrix over invariant-class-respecting permutations.
std::uint64_t poset_canonical_key(const Poset& p);

// One representative per isomorphism class of posets on n elements, built
// by adding a maximal element over every order ideal of every (n-1)-element
// class, deduplicated by canonical key. Returns the class count.
std::uint64_t enumerate_posets(int n, const std::function<void(const Poset&)>& sink);

// True iff H1 of the order complex is torsion-free for every poset with at
// most n elements (exhaustive check, independent of the graph pipeline).
bool verify_small_posets(int n);

// "n" on the first line, then one line per element listing its upper covers.
void save_poset(const Poset& p, std::ostream& out);

}  // namespace ftor

#endif
