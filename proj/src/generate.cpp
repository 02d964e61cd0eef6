#include "ftor/generate.hpp"

#include <algorithm>

#include "ftor/canon.hpp"

namespace ftor {

namespace {

// Deletion-vertex invariants, compared lexicographically: degree, then sum
// of neighbor degrees, then twice the triangle count at the vertex. Cheap
// per-vertex filters so that full canonical labeling only runs on genuine
// ties for the canonical deletion vertex.
int key_sumdeg(const Graph& g, const int* deg, int u) {
    int s = 0;
    VertexSet row = g.adj[u];
    while (row) {
        int w = lowest_vertex(row);
        row &= row - 1;
        s += deg[w];
    }
    return s;
}

int key_tri(const Graph& g, int u) {
    int s = 0;
    VertexSet row = g.adj[u];
    while (row) {
        int w = lowest_vertex(row);
        row &= row - 1;
        s += popcount(static_cast<VertexSet>(g.adj[u] & g.adj[w]));
    }
    return s;
}

// Decides whether child c with new vertex v is the canonical extension of
// its parent. The canonical deletion vertex is the competitor (non-cut
// vertex in connected mode, any vertex otherwise) maximizing the invariant
// key, ties broken by canonical position; c is kept iff v shares its orbit.
bool accept_child(const Graph& c, int v, bool connected_mode) {
    int n = c.n;
    int deg[kMaxVertices];
    for (int u = 0; u < n; ++u) deg[u] = c.degree(u);
    int dv = deg[v];

    VertexSet cand = 0;
    for (int u = 0; u < n; ++u)
        if (u != v && deg[u] >= dv) cand |= vbit(u);
    if (!cand) return true;

    if (connected_mode) {
        cand &= ~cut_vertices(c);
        if (!cand) return true;
    }

    VertexSet rest = cand;
    while (rest) {
        int u = lowest_vertex(rest);
        rest &= rest - 1;
        if (deg[u] > dv) return false;
    }

    int k1v = key_sumdeg(c, deg, v);
    VertexSet ties = 0;
    rest = cand;
    while (rest) {
        int u = lowest_vertex(rest);
        rest &= rest - 1;
        int k1u = key_sumdeg(c, deg, u);
        if (k1u > k1v) return false;
        if (k1u == k1v) ties |= vbit(u);
    }
    if (!ties) return true;

    int k2v = key_tri(c, v);
    VertexSet ties2 = 0;
    rest = ties;
    while (rest) {
        int u = lowest_vertex(rest);
        rest &= rest - 1;
        int k2u = key_tri(c, u);
        if (k2u > k2v) return false;
        if (k2u == k2v) ties2 |= vbit(u);
    }
    if (!ties2) return true;

    CanonResult cr = canon_full(c);
    int w = v;
    rest = ties2;
    while (rest) {
        int u = lowest_vertex(rest);
        rest &= rest - 1;
        if (cr.perm[u] > cr.perm[w]) w = u;
    }
    return cr.same_orbit(v, w);
}

struct Expander {
    int n;
    int dmin;
    int dmax;
    bool connected_mode;
    const GraphSink& sink;
    GenSummary summary;

    void recurse(const Graph& p) {
        int k = p.n;
        VertexSet allowed = 0;
        for (int u = 0; u < k; ++u)
            if (p.degree(u) < dmax) allowed |= vbit(u);
        if (connected_mode && !allowed) return;  // no way to attach the new vertex

        bool leaf_level = (k + 1 == n);
        // Ascending submask enumeration; connected mode skips the empty mask.
        unsigned s = connected_mode ? (allowed & (~allowed + 1u)) : 0u;
        std::vector<Cert> seen;
        while (true) {
            VertexSet mask = static_cast<VertexSet>(s);
            if (popcount(mask) <= dmax) {
                Graph c = p;
                c.n = k + 1;
                c.adj[k] = mask;
                VertexSet rest = mask;
                while (rest) {
                    int u = lowest_vertex(rest);
                    rest &= rest - 1;
                    c.adj[u] |= vbit(k);
                }
                bool viable = true;
                if (leaf_level && dmin > 0) {
                    for (int u = 0; u <= k && viable; ++u)
                        if (c.degree(u) < dmin) viable = false;
                }
                if (viable && accept_child(c, k, connected_mode)) {
                    Cert cert = canon_full(c).cert;
                    if (std::find(seen.begin(), seen.end(), cert) == seen.end()) {
                        seen.push_back(cert);
                        if (leaf_level) {
                            sink(c);
                            ++summary.emitted;
                        } else {
                            recurse(c);
                        }
                    }
                }
            }
            if (s == allowed) break;
            s = (s - allowed) & allowed;
        }
    }
};

GenSummary run(int n, int dmin, int dmax, bool connected_mode, const GraphSink& sink,
               const Graph* seed) {
    GenSummary total;
    if (n < 1 || n > kMaxVertices) return total;
    if (dmax > n - 1) dmax = n - 1;
    if (dmin > dmax) return total;

    Expander e{n, dmin, dmax, connected_mode, sink, {}};
    Graph k1 = empty_graph(1);
    const Graph& root = seed ? *seed : k1;
    if (root.n == n) {
        bool ok = true;
        for (int u = 0; u < n; ++u)
            if (root.degree(u) < dmin) ok = false;
        if (ok) {
            sink(root);
            e.summary.emitted = 1;
        }
    } else if (root.n < n) {
        e.recurse(root);
    }
    total += e.summary;
    return total;
}

}  // namespace

GenSummary generate_connected(int n, int dmin, int dmax, const GraphSink& sink) {
    return run(n, dmin, dmax, true, sink, nullptr);
}

GenSummary generate_all(int n, int dmin, int dmax, const GraphSink& sink) {
    return run(n, dmin, dmax, false, sink, nullptr);
}

GenSummary expand_connected_subtree(const Graph& seed, int n, int dmin, int dmax,
                                    const GraphSink& sink) {
    return run(n, dmin, dmax, true, sink, &seed);
}

std::vector<Graph> connected_seeds(int s, int dmax) {
    std::vector<Graph> seeds;
    generate_connected(s, 0, dmax, [&](const Graph& g) { seeds.push_back(g); });
    return seeds;
}

}  // namespace ftor
