#ifndef FTOR_GRAPH_HPP
#define FTOR_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace ftor {

// Vertex subsets are bit masks. The vertex cap of 16 keeps every adjacency
// row in one 16-bit word, so all set operations are single-word bit ops.
using VertexSet = std::uint16_t;

inline constexpr int kMaxVertices = 16;

constexpr VertexSet vbit(int v) { return static_cast<VertexSet>(1u << v); }
constexpr VertexSet full_set(int n) { return static_cast<VertexSet>((1u << n) - 1u); }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Simple undirected graph on n labeled vertices, n <= 16.
// adj[v] is the neighbor mask of v; invariants: symmetric, irreflexive,
// no bits at or above position n.
struct Graph {
    int n = 0;
    std::array<VertexSet, kMaxVertices> adj{};

    bool edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
    }
    int degree(int v) const { return popcount(adj[v]); }
    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
    bool operator==(const Graph&) const = default;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

// Symmetry, irreflexivity, all bits below n.
bool check_invariants(const Graph& g);

// graph6, short header form only (n <= 16 here). One graph per line,
// header byte n+63, then the upper triangle x(0,1), x(0,2), x(1,2), ...
// packed big-endian into 6-bit groups, each +63, final group zero-padded.
// Throws std::invalid_argument on malformed input.
Graph from_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);

// Subgraph induced by s, vertices relabeled by increasing original index.
// s may be empty; the result is then the 0-vertex graph.
Graph induced(const Graph& g, VertexSet s);

// Throws std::out_of_range if v is not a vertex; requires n >= 2.
Graph delete_vertex(const Graph& g, int v);

// The induced subgraph on N(v) padded with isolated vertices back to n
// vertices, so the result always has the same vertex count as g.
Graph link_padded(const Graph& g, int v);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// Mask of cut vertices (articulation points). Meaningful per component.
VertexSet cut_vertices(const Graph& g);

// Every degree within [4, n-4]. Always false for n <= 7.
bool is_tame(const Graph& g);

// Some 5-subset induces a 5-cycle.
bool has_induced_c5(const Graph& g);

}  // namespace ftor

#endif
