#include "ftor/canon.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ftor {

namespace {

struct Partition {
    std::array<VertexSet, kMaxVertices> cell{};
    int ncells = 0;

    bool discrete() const {
        for (int i = 0; i < ncells; ++i)
            if (popcount(cell[i]) != 1) return false;
        return true;
    }
};

// Split cells against cells until no cell splits any other. Restarting after
// each split keeps the iteration order a function of the partition alone,
// which is what makes the refinement equivariant under relabeling.
void refine(const Graph& g, Partition& p) {
restart:
    for (int wi = 0; wi < p.ncells; ++wi) {
        VertexSet w = p.cell[wi];
        for (int ci = 0; ci < p.ncells; ++ci) {
            VertexSet c = p.cell[ci];
            if (popcount(c) <= 1) continue;
            VertexSet bucket[kMaxVertices + 1] = {};
            int seen = 0;
            VertexSet rest = c;
            while (rest) {
                int v = lowest_vertex(rest);
                rest &= rest - 1;
                int d = popcount(static_cast<VertexSet>(g.adj[v] & w));
                bucket[d] |= vbit(v);
                ++seen;
            }
            int nonempty = 0;
            for (int d = 0; d <= kMaxVertices; ++d)
                if (bucket[d]) ++nonempty;
            if (nonempty <= 1) continue;
            // Replace cell ci by its buckets in ascending count order.
            for (int i = p.ncells - 1; i > ci; --i) p.cell[i + nonempty - 1] = p.cell[i];
            int at = ci;
            for (int d = 0; d <= kMaxVertices; ++d)
                if (bucket[d]) p.cell[at++] = bucket[d];
            p.ncells += nonempty - 1;
            goto restart;
        }
    }
}

using Perm = std::array<std::uint8_t, kMaxVertices>;

struct Searcher {
    const Graph& g;
    int n;

    bool have_first = false;
    Cert first_cert{};
    Perm first_perm{};
    Cert best_cert{};
    Perm best_perm{};

    std::vector<Perm> gens;
    std::array<std::uint8_t, kMaxVertices> uf{};  // global orbit union-find

    int path[kMaxVertices];  // individualized vertices, root to current node

    explicit Searcher(const Graph& graph) : g(graph), n(graph.n) {
        for (int v = 0; v < n; ++v) uf[v] = static_cast<std::uint8_t>(v);
    }

    int find(std::array<std::uint8_t, kMaxVertices>& f, int v) const {
        while (f[v] != v) {
            f[v] = f[f[v]];
            v = f[v];
        }
        return v;
    }

    void unite(std::array<std::uint8_t, kMaxVertices>& f, int a, int b) const {
        a = find(f, a);
        b = find(f, b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        f[b] = static_cast<std::uint8_t>(a);  // keep smallest vertex as root
    }

    Cert leaf_cert(const Perm& perm) const {
        int pinv[kMaxVertices];
        for (int v = 0; v < n; ++v) pinv[perm[v]] = v;
        Cert cert{};
        int t = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++t)
                if (g.edge(pinv[row], pinv[col]))
                    cert[t >> 6] |= 1ull << (63 - (t & 63));
        return cert;
    }

    void record_automorphism(const Perm& a, const Perm& b) {
        // a and b produce the same labeled graph, so b^-1 o a is an automorphism.
        int binv[kMaxVertices];
        for (int v = 0; v < n; ++v) binv[b[v]] = v;
        Perm gamma{};
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            gamma[v] = static_cast<std::uint8_t>(binv[a[v]]);
            if (gamma[v] != v) identity = false;
        }
        if (identity) return;
        for (int v = 0; v < n; ++v) unite(uf, v, gamma[v]);
        gens.push_back(gamma);
    }

    void handle_leaf(const Partition& p) {
        Perm perm{};
        for (int i = 0; i < p.ncells; ++i) perm[lowest_vertex(p.cell[i])] = static_cast<std::uint8_t>(i);
        Cert cert = leaf_cert(perm);
        if (!have_first) {
            have_first = true;
            first_cert = cert;
            first_perm = perm;
            best_cert = cert;
            best_perm = perm;
            return;
        }
        if (cert == first_cert) record_automorphism(perm, first_perm);
        if (cert < best_cert) {
            best_cert = cert;
            best_perm = perm;
        } else if (cert == best_cert && !(first_cert == best_cert)) {
            record_automorphism(perm, best_perm);
        }
    }

    // Orbits of the subgroup generated by discovered automorphisms that fix
    // the current path pointwise; only these may prune siblings soundly.
    void path_stabilizer_orbits(int depth, std::array<std::uint8_t, kMaxVertices>& f) const {
        for (int v = 0; v < n; ++v) f[v] = static_cast<std::uint8_t>(v);
        for (const Perm& gamma : gens) {
            bool fixes = true;
            for (int i = 0; i < depth; ++i)
                if (gamma[path[i]] != path[i]) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) unite(f, v, gamma[v]);
        }
    }

    void search(Partition p, int depth) {
        refine(g, p);
        if (p.discrete()) {
            handle_leaf(p);
            return;
        }
        int target = -1, target_size = kMaxVertices + 1;
        for (int i = 0; i < p.ncells; ++i) {
            int s = popcount(p.cell[i]);
            if (s > 1 && s < target_size) {
                target = i;
                target_size = s;
            }
        }
        VertexSet cell = p.cell[target];
        VertexSet explored = 0;
        VertexSet rest = cell;
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            if (explored) {
                std::array<std::uint8_t, kMaxVertices> f{};
                path_stabilizer_orbits(depth, f);
                int rv = find(f, v);
                bool pruned = false;
                VertexSet e = explored;
                while (e) {
                    int u = lowest_vertex(e);
                    e &= e - 1;
                    if (find(f, u) == rv) {
                        pruned = true;
                        break;
                    }
                }
                if (pruned) continue;
            }
            explored |= vbit(v);
            Partition child = p;
            for (int i = child.ncells - 1; i > target; --i) child.cell[i + 1] = child.cell[i];
            child.cell[target] = vbit(v);
            child.cell[target + 1] = cell & ~vbit(v);
            ++child.ncells;
            path[depth] = v;
            search(child, depth + 1);
        }
    }
};

}  // namespace

Cert certificate(const Graph& g) {
    Cert cert{};
    int t = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row, ++t)
            if (g.edge(row, col)) cert[t >> 6] |= 1ull << (63 - (t & 63));
    return cert;
}

CanonResult canon_full(const Graph& g) {
    if (g.n < 1 || g.n > kMaxVertices)
        throw std::invalid_argument("canon_full: vertex count out of range");
    Searcher s(g);
    Partition root;
    root.cell[0] = full_set(g.n);
    root.ncells = 1;
    s.search(root, 0);

    CanonResult r;
    r.perm = s.best_perm;
    r.cert = s.best_cert;
    r.canonical.n = g.n;
    for (int v = 0; v < g.n; ++v) {
        VertexSet row = g.adj[v];
        VertexSet mapped = 0;
        while (row) {
            int u = lowest_vertex(row);
            row &= row - 1;
            mapped |= vbit(s.best_perm[u]);
        }
        r.canonical.adj[s.best_perm[v]] = mapped;
    }
    r.orbit_count = 0;
    for (int v = 0; v < g.n; ++v) {
        r.orbit[v] = static_cast<std::uint8_t>(s.find(s.uf, v));
        if (r.orbit[v] == v) ++r.orbit_count;
    }
    return r;
}

CanonicalCode canonical_form(const Graph& g) {
    return CanonicalCode{to_graph6(canon_full(g).canonical)};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n) return false;
    if (g.n == 0) return true;
    return canon_full(g).cert == canon_full(h).cert;
}

CanonicalSet::CanonicalSet(std::vector<CanonicalCode> codes) : codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

CanonicalSet CanonicalSet::from_graphs(const std::vector<Graph>& graphs) {
    std::vector<CanonicalCode> codes;
    codes.reserve(graphs.size());
    for (const Graph& g : graphs) codes.push_back(canonical_form(g));
    return CanonicalSet(std::move(codes));
}

bool CanonicalSet::contains_code(const CanonicalCode& code) const {
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

void CanonicalSet::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const CanonicalCode& c : codes_) out << c.bytes << '\n';
    if (!out) throw std::runtime_error("write failure on " + path);
}

CanonicalSet CanonicalSet::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<CanonicalCode> codes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        codes.push_back(CanonicalCode{line});
    }
    return CanonicalSet(std::move(codes));
}

}  // namespace ftor
