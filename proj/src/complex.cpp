#include "ftor/complex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftor {

bool tuple_lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = lowest_vertex(a), vb = lowest_vertex(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

SimplicialComplex make_complex(int n, std::vector<VertexSet> faces) {
    std::vector<VertexSet> keep;
    for (VertexSet f : faces) {
        bool maximal = true;
        for (VertexSet g : faces)
            if (f != g && (f & g) == f) {
                maximal = false;
                break;
            }
        if (maximal) keep.push_back(f);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::sort(keep.begin(), keep.end(), tuple_lex_less);
    return SimplicialComplex{n, std::move(keep)};
}

int dimension(const SimplicialComplex& c) {
    int d = -1;
    for (VertexSet f : c.facets) d = std::max(d, popcount(f) - 1);
    return d;
}

namespace {

void subsets_of_size(VertexSet pool, int size, VertexSet acc, std::vector<VertexSet>& out) {
    if (size == 0) {
        out.push_back(acc);
        return;
    }
    while (popcount(pool) >= size) {
        int v = lowest_vertex(pool);
        pool &= pool - 1;
        subsets_of_size(pool, size - 1, acc | vbit(v), out);
    }
}

// Bron-Kerbosch with pivoting; collects maximal cliques (isolated vertices
// come out as singletons).
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    VertexSet both = p | x;
    int pivot = lowest_vertex(both), best = -1;
    VertexSet scan = both;
    while (scan) {
        int u = lowest_vertex(scan);
        scan &= scan - 1;
        int cnt = popcount(static_cast<VertexSet>(p & g.adj[u]));
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    VertexSet cand = p & ~g.adj[pivot];
    while (cand) {
        int v = lowest_vertex(cand);
        cand &= cand - 1;
        bron_kerbosch(g, r | vbit(v), p & g.adj[v], x & g.adj[v], out);
        p &= ~vbit(v);
        x |= vbit(v);
    }
}

}  // namespace

std::vector<VertexSet> faces_of_dim(const SimplicialComplex& c, int k) {
    std::vector<VertexSet> out;
    if (k < 0) return out;
    for (VertexSet f : c.facets)
        if (popcount(f) >= k + 1) subsets_of_size(f, k + 1, 0, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), tuple_lex_less);
    return out;
}

SimplicialComplex clique_complex(const Graph& g, int max_dim) {
    std::vector<VertexSet> cliques;
    bron_kerbosch(g, 0, full_set(g.n), 0, cliques);
    if (max_dim >= 0) {
        std::vector<VertexSet> trimmed;
        for (VertexSet q : cliques) {
            if (popcount(q) <= max_dim + 1)
                trimmed.push_back(q);
            else
                subsets_of_size(q, max_dim + 1, 0, trimmed);
        }
        return make_complex(g.n, std::move(trimmed));
    }
    return make_complex(g.n, std::move(cliques));
}

IntMatrix boundary_matrix(int k, const SimplicialComplex& c) {
    if (k < 1) throw std::invalid_argument("boundary_matrix: k must be >= 1");
    std::vector<VertexSet> lo = faces_of_dim(c, k - 1);
    std::vector<VertexSet> hi = faces_of_dim(c, k);
    auto row_of = [&](VertexSet f) {
        auto it = std::lower_bound(lo.begin(), lo.end(), f, tuple_lex_less);
        return static_cast<int>(it - lo.begin());
    };
    IntMatrix m(static_cast<int>(lo.size()), static_cast<int>(hi.size()));
    for (int col = 0; col < static_cast<int>(hi.size()); ++col) {
        VertexSet face = hi[col];
        int i = 0;
        VertexSet rest = face;
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            m.at(row_of(face & ~vbit(v)), col) = (i % 2 == 0) ? 1 : -1;
            ++i;
        }
    }
    return m;
}

void save_facets(const SimplicialComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (VertexSet f : c.facets) {
        bool first = true;
        VertexSet rest = f;
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failure on " + path);
}

SimplicialComplex read_facets(std::istream& in) {
    std::vector<VertexSet> faces;
    int n = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        VertexSet f = 0;
        int v;
        while (ss >> v) {
            if (v < 0 || v >= kMaxVertices)
                throw std::invalid_argument("facet vertex out of range: " + std::to_string(v));
            f |= vbit(v);
            n = std::max(n, v + 1);
        }
        if (f) faces.push_back(f);
    }
    return make_complex(n, std::move(faces));
}

SimplicialComplex load_facets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_facets(in);
}

}  // namespace ftor
