#include "ftor/homology.hpp"

#include <stdexcept>

namespace ftor {

std::string HomologyGroup::to_string() const {
    std::string s;
    if (betti > 0) {
        s = "Z";
        if (betti > 1) s += "^" + std::to_string(betti);
    }
    for (long long d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

HomologyGroup homology(const SimplicialComplex& c, int k) {
    if (k < 0) throw std::invalid_argument("homology: negative dimension");
    auto fk = faces_of_dim(c, k);
    if (fk.empty()) return {};
    int rank_dk = 0;
    if (k >= 1) rank_dk = matrix_rank(boundary_matrix(k, c));
    SnfResult up = smith_normal_form(boundary_matrix(k + 1, c));
    HomologyGroup h;
    h.betti = static_cast<long long>(fk.size()) - rank_dk - up.rank;
    for (long long d : up.factors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

HomologyGroup h1_clique(const Graph& g) {
    if (g.n == 0) return {};
    // Edge index in tuple-lex order (u < v, ordered by (u, v)).
    int edge_index[kMaxVertices][kMaxVertices];
    int nedges = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.edge(u, v)) edge_index[u][v] = nedges++;
    // Triangles in tuple-lex order.
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!g.edge(a, b)) continue;
            VertexSet common = g.adj[a] & g.adj[b] & ~full_set(b + 1);
            while (common) {
                int c = lowest_vertex(common);
                common &= common - 1;
                tris.push_back({a, b, c});
            }
        }
    IntMatrix d2(nedges, static_cast<int>(tris.size()));
    for (int col = 0; col < d2.cols; ++col) {
        auto [a, b, c] = tris[col];
        d2.at(edge_index[b][c], col) = 1;
        d2.at(edge_index[a][c], col) = -1;
        d2.at(edge_index[a][b], col) = 1;
    }
    SnfResult up = smith_normal_form(d2);
    int rank_d1 = g.n - component_count(g);
    HomologyGroup h;
    h.betti = nedges - rank_d1 - up.rank;
    for (long long d : up.factors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

bool has_h1_torsion(const Graph& g) { return h1_clique(g).has_torsion(); }

bool h1_nontrivial(const Graph& g) { return !h1_clique(g).trivial(); }

}  // namespace ftor
