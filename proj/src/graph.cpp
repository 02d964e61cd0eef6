#include "ftor/graph.hpp"

#include <stdexcept>

namespace ftor {

Graph empty_graph(int n) {
    Graph g;
    g.n = n;
    return g;
}

Graph complete_graph(int n) {
    Graph g;
    g.n = n;
    for (int v = 0; v < n; ++v) g.adj[v] = full_set(n) & ~vbit(v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g;
    g.n = n;
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g;
    g.n = n;
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen_graph() {
    Graph g;
    g.n = 10;
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);      // outer 5-cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);            // spokes
    }
    return g;
}

bool check_invariants(const Graph& g) {
    if (g.n < 0 || g.n > kMaxVertices) return false;
    for (int v = 0; v < kMaxVertices; ++v) {
        if (v >= g.n && g.adj[v] != 0) return false;
    }
    for (int v = 0; v < g.n; ++v) {
        if (g.adj[v] & ~full_set(g.n)) return false;
        if (g.adj[v] & vbit(v)) return false;
        for (int u = v + 1; u < g.n; ++u) {
            if (g.edge(v, u) != g.edge(u, v)) return false;
        }
    }
    return true;
}

Graph from_graph6(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == ':' || header == ';' || header == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 not supported");
    if (header == 126)
        throw std::invalid_argument("graph6: long header form not supported");
    if (header < 63 || header > 126)
        throw std::invalid_argument("graph6: malformed header byte");
    int n = header - 63;
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6: vertex count " + std::to_string(n) +
                                    " out of supported range 1..16");
    int nbits = n * (n - 1) / 2;
    int ngroups = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + ngroups)
        throw std::invalid_argument("graph6: payload length " +
                                    std::to_string(line.size() - 1) + ", expected " +
                                    std::to_string(ngroups));
    Graph g;
    g.n = n;
    int bit = 0, row = 0, col = 1;
    for (int k = 0; k < ngroups; ++k) {
        unsigned char c = static_cast<unsigned char>(line[1 + k]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: out-of-range payload character");
        unsigned val = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if ((val >> b) & 1u)
                    throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if ((val >> b) & 1u) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int nbits = g.n * (g.n - 1) / 2;
    unsigned val = 0;
    int have = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row) {
            val = (val << 1) | (g.edge(row, col) ? 1u : 0u);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + val));
                val = 0;
                have = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        val <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(63 + val));
    }
    return out;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    for (int v = 0; v < g.n; ++v) c.adj[v] = full_set(g.n) & ~g.adj[v] & ~vbit(v);
    return c;
}

Graph induced(const Graph& g, VertexSet s) {
    Graph h;
    h.n = popcount(s);
    int idx[kMaxVertices];
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (s & vbit(v)) idx[v] = k++;
    for (int v = 0; v < g.n; ++v) {
        if (!(s & vbit(v))) continue;
        VertexSet row = g.adj[v] & s;
        VertexSet packed = 0;
        while (row) {
            int u = lowest_vertex(row);
            row &= row - 1;
            packed |= vbit(idx[u]);
        }
        h.adj[idx[v]] = packed;
    }
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::out_of_range("delete_vertex: vertex out of range");
    return induced(g, full_set(g.n) & ~vbit(v));
}

Graph link_padded(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::out_of_range("link_padded: vertex out of range");
    Graph h = induced(g, g.adj[v]);
    h.n = g.n;
    return h;
}

bool is_connected(const Graph& g) {
    if (g.n <= 0) return false;
    VertexSet comp = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = lowest_vertex(frontier);
            frontier &= frontier - 1;
            next |= g.adj[v];
        }
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp == full_set(g.n);
}

int component_count(const Graph& g) {
    VertexSet seen = 0;
    int count = 0;
    for (int v = 0; v < g.n; ++v) {
        if (seen & vbit(v)) continue;
        ++count;
        VertexSet comp = vbit(v), frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            while (frontier) {
                int u = lowest_vertex(frontier);
                frontier &= frontier - 1;
                next |= g.adj[u];
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
    }
    return count;
}

VertexSet cut_vertices(const Graph& g) {
    // Iterative Tarjan lowpoint DFS, one pass per component.
    int disc[kMaxVertices], low[kMaxVertices], parent[kMaxVertices];
    VertexSet rest[kMaxVertices];
    for (int v = 0; v < g.n; ++v) disc[v] = -1;
    VertexSet cuts = 0;
    int timer = 0;
    for (int root = 0; root < g.n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        int stack[kMaxVertices];
        int sp = 0;
        disc[root] = low[root] = timer++;
        parent[root] = -1;
        rest[root] = g.adj[root];
        stack[sp++] = root;
        while (sp) {
            int v = stack[sp - 1];
            if (rest[v]) {
                int u = lowest_vertex(rest[v]);
                rest[v] &= rest[v] - 1;
                if (disc[u] == -1) {
                    disc[u] = low[u] = timer++;
                    parent[u] = v;
                    rest[u] = g.adj[u];
                    stack[sp++] = u;
                    if (v == root) ++root_children;
                } else if (u != parent[v]) {
                    if (disc[u] < low[v]) low[v] = disc[u];
                }
            } else {
                --sp;
                int p = parent[v];
                if (p != -1) {
                    if (low[v] < low[p]) low[p] = low[v];
                    if (p != root && low[v] >= disc[p]) cuts |= vbit(p);
                }
            }
        }
        if (root_children > 1) cuts |= vbit(root);
    }
    return cuts;
}

bool is_tame(const Graph& g) {
    if (g.n < 8) return false;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d < 4 || d > g.n - 4) return false;
    }
    return true;
}

bool has_induced_c5(const Graph& g) {
    if (g.n < 5) return false;
    // Vertices of total degree < 2 cannot lie on an induced cycle.
    int cand[kMaxVertices];
    int m = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 2) cand[m++] = v;
    if (m < 5) return false;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int d = c + 1; d < m; ++d)
                    for (int e = d + 1; e < m; ++e) {
                        VertexSet s = vbit(cand[a]) | vbit(cand[b]) | vbit(cand[c]) |
                                      vbit(cand[d]) | vbit(cand[e]);
                        // Induced 2-regular on 5 vertices is exactly C5.
                        if (popcount(static_cast<VertexSet>(g.adj[cand[a]] & s)) == 2 &&
                            popcount(static_cast<VertexSet>(g.adj[cand[b]] & s)) == 2 &&
                            popcount(static_cast<VertexSet>(g.adj[cand[c]] & s)) == 2 &&
                            popcount(static_cast<VertexSet>(g.adj[cand[d]] & s)) == 2 &&
                            popcount(static_cast<VertexSet>(g.adj[cand[e]] & s)) == 2)
                            return true;
                    }
    return false;
}

}  // namespace ftor
