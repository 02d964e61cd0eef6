#ifndef FTOR_CANON_HPP
#define FTOR_CANON_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ftor/graph.hpp"

namespace ftor {

// Upper-triangle adjacency bits of a labeled graph in graph6 bit order,
// packed so that array comparison is the format's lexicographic order.
using Cert = std::array<std::uint64_t, 2>;

Cert certificate(const Graph& g);

// Everything one canonical labeling run produces: the relabeled graph, the
// vertex->position map that achieves it, and the automorphism orbits.
struct CanonResult {
    Graph canonical;
    Cert cert{};
    std::array<std::uint8_t, kMaxVertices> perm{};   // original vertex -> position
    std::array<std::uint8_t, kMaxVertices> orbit{};  // smallest vertex in each orbit
    int orbit_count = 0;

    bool same_orbit(int u, int v) const { return orbit[u] == orbit[v]; }
};

// McKay-style canonical labeling: iterated equitable refinement, then
// backtracking over target-cell vertices pruned by automorphisms found en
// route. The canonical form is the lexicographically least certificate over
// explored leaves. Requires 1 <= n <= 16.
CanonResult canon_full(const Graph& g);

// graph6 encoding of the canonically relabeled graph. Equal for two graphs
// iff they are isomorphic; totally ordered as byte strings.
struct CanonicalCode {
    std::string bytes;

    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// Sorted, deduplicated canonical codes with binary-search membership.
class CanonicalSet {
public:
    CanonicalSet() = default;
    explicit CanonicalSet(std::vector<CanonicalCode> codes);

    static CanonicalSet from_graphs(const std::vector<Graph>& graphs);

    bool contains_code(const CanonicalCode& code) const;
    bool contains(const Graph& g) const { return contains_code(canonical_form(g)); }

    std::size_t size() const { return codes_.size(); }
    const std::vector<CanonicalCode>& codes() const { return codes_; }

    // One graph6 line per code, in sorted order.
    void save(const std::string& path) const;
    static CanonicalSet load(const std::string& path);

private:
    std::vector<CanonicalCode> codes_;
};

}  // namespace ftor

#endif
