#include "ftor/classify.hpp"

#include <algorithm>
#include <vector>

namespace ftor {

std::string label_name(ClassLabel label) {
    switch (label) {
        case ClassLabel::RP2_HOMEOMORPHIC: return "RP2_HOMEOMORPHIC";
        case ClassLabel::COLLAPSES_TO_RP2: return "COLLAPSES_TO_RP2";
        case ClassLabel::RP2_WEDGE_S1_HOMOLOGY: return "RP2_WEDGE_S1_HOMOLOGY";
        case ClassLabel::OTHER: return "OTHER";
    }
    return "OTHER";
}

SurfaceReport surface_check(const SimplicialComplex& c) {
    SurfaceReport rep;
    std::vector<VertexSet> tris = faces_of_dim(c, 2);
    std::vector<VertexSet> edges = faces_of_dim(c, 1);
    std::vector<VertexSet> verts = faces_of_dim(c, 0);
    if (tris.empty() || verts.empty()) return rep;

    rep.is_pure_2d = true;
    for (VertexSet f : c.facets)
        if (popcount(f) != 3) rep.is_pure_2d = false;
    rep.euler = static_cast<int>(verts.size()) - static_cast<int>(edges.size()) +
                static_cast<int>(tris.size());

    // Connectivity of the 1-skeleton over the vertices actually present.
    Graph skel = empty_graph(c.n);
    for (VertexSet e : edges) {
        int u = lowest_vertex(e);
        int v = lowest_vertex(static_cast<VertexSet>(e & (e - 1)));
        skel.add_edge(u, v);
    }
    VertexSet present = 0;
    for (VertexSet v : verts) present |= v;
    {
        VertexSet comp = vbit(lowest_vertex(present)), frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            while (frontier) {
                int v = lowest_vertex(frontier);
                frontier &= frontier - 1;
                next |= skel.adj[v];
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        rep.connected = comp == present;
    }
    if (!rep.is_pure_2d) return rep;

    // Every edge must lie in exactly two triangles.
    std::vector<std::array<int, 2>> edge_tris(edges.size(), {-1, -1});
    auto edge_id = [&](VertexSet e) {
        return static_cast<int>(
            std::lower_bound(edges.begin(), edges.end(), e, tuple_lex_less) - edges.begin());
    };
    bool closed = true;
    for (int t = 0; t < static_cast<int>(tris.size()) && closed; ++t) {
        VertexSet tri = tris[t];
        VertexSet rest = tri;
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            int e = edge_id(tri & ~vbit(v));
            if (edge_tris[e][0] == -1)
                edge_tris[e][0] = t;
            else if (edge_tris[e][1] == -1)
                edge_tris[e][1] = t;
            else
                closed = false;
        }
    }
    for (const auto& pair : edge_tris)
        if (pair[1] == -1) closed = false;

    // Each vertex link must be one cycle: 2-regular and connected.
    if (closed) {
        for (VertexSet vmask : verts) {
            int v = lowest_vertex(vmask);
            Graph link = empty_graph(c.n);
            VertexSet link_verts = 0;
            for (VertexSet tri : tris) {
                if (!(tri & vbit(v))) continue;
                VertexSet opp = tri & ~vbit(v);
                int a = lowest_vertex(opp);
                int b = lowest_vertex(static_cast<VertexSet>(opp & (opp - 1)));
                link.add_edge(a, b);
                link_verts |= opp;
            }
            VertexSet rest = link_verts;
            while (rest) {
                int u = lowest_vertex(rest);
                rest &= rest - 1;
                if (popcount(link.adj[u]) != 2) closed = false;
            }
            if (!closed) break;
            VertexSet comp = vbit(lowest_vertex(link_verts)), frontier = comp;
            while (frontier) {
                VertexSet next = 0;
                while (frontier) {
                    int u = lowest_vertex(frontier);
                    frontier &= frontier - 1;
                    next |= link.adj[u];
                }
                frontier = next & ~comp;
                comp |= frontier;
            }
            if (comp != link_verts) closed = false;
            if (!closed) break;
        }
    }
    rep.is_closed_surface = closed && rep.connected;
    if (!rep.is_closed_surface) return rep;

    // Orientation propagation: adjacent triangles must induce opposite
    // directions on their shared edge. Sorted triangle (a,b,c) with flag +1
    // runs a->b->c->a, so sorted edges (a,b) and (b,c) are forward and
    // (a,c) is backward.
    auto edge_dir = [&](VertexSet tri, VertexSet e) {
        int b = lowest_vertex(static_cast<VertexSet>(tri & (tri - 1)));  // middle vertex
        // (a,c) runs against the cycle a->b->c->a; the other two edges run with it.
        return (e & vbit(b)) ? 1 : -1;
    };
    std::vector<int> flag(tris.size(), 0);
    std::vector<int> stack;
    flag[0] = 1;
    stack.push_back(0);
    bool orientable = true;
    while (!stack.empty() && orientable) {
        int t = stack.back();
        stack.pop_back();
        VertexSet rest = tris[t];
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            VertexSet e = tris[t] & ~vbit(v);
            const auto& pair = edge_tris[edge_id(e)];
            int other = pair[0] == t ? pair[1] : pair[0];
            int need = -flag[t] * edge_dir(tris[t], e) * edge_dir(tris[other], e);
            if (flag[other] == 0) {
                flag[other] = need;
                stack.push_back(other);
            } else if (flag[other] != need) {
                orientable = false;
                break;
            }
        }
    }
    rep.orientable = orientable;
    return rep;
}

SimplicialComplex greedy_collapse(const SimplicialComplex& c) {
    std::vector<char> present(1u << c.n, 0);
    std::vector<int> cofaces(1u << c.n, 0);
    std::vector<VertexSet> faces;
    for (VertexSet f : c.facets) {
        // downward closure of the facet
        for (VertexSet s = f; s; s = (s - 1) & f) {
            if (!present[s]) {
                present[s] = 1;
                faces.push_back(s);
            }
        }
    }
    std::sort(faces.begin(), faces.end(), tuple_lex_less);
    for (VertexSet f : faces)
        for (VertexSet s = (f - 1) & f; s; s = (s - 1) & f) ++cofaces[s];

    auto remove_face = [&](VertexSet f) {
        present[f] = 0;
        for (VertexSet s = (f - 1) & f; s; s = (s - 1) & f)
            if (present[s]) --cofaces[s];
    };

    while (true) {
        VertexSet free_face = 0;
        for (VertexSet f : faces) {
            if (present[f] && cofaces[f] == 1) {
                free_face = f;
                break;  // faces are tuple-lex sorted
            }
        }
        if (!free_face) break;
        VertexSet coface = 0;
        for (VertexSet g : faces)
            if (present[g] && g != free_face && (g & free_face) == free_face) {
                coface = g;
                break;
            }
        remove_face(coface);
        remove_face(free_face);
    }

    std::vector<VertexSet> survivors;
    for (VertexSet f : faces)
        if (present[f]) survivors.push_back(f);
    return make_complex(c.n, std::move(survivors));
}

ClassLabel classify_complex(const Graph& g) {
    SimplicialComplex full = clique_complex(g);
    if (dimension(full) == 2 && surface_check(full).is_projective_plane())
        return ClassLabel::RP2_HOMEOMORPHIC;
    SimplicialComplex core = greedy_collapse(full);
    if (dimension(core) == 2 && surface_check(core).is_projective_plane())
        return ClassLabel::COLLAPSES_TO_RP2;
    if (homology(full, 0) == HomologyGroup{1, {}} &&
        homology(full, 1) == HomologyGroup{1, {2}} && homology(full, 2) == HomologyGroup{0, {}})
        return ClassLabel::RP2_WEDGE_S1_HOMOLOGY;
    return ClassLabel::OTHER;
}

}  // namespace ftor
