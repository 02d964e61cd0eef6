#include "ftor/poset.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "ftor/homology.hpp"

namespace ftor {

VertexSet Poset::downset(int x) const {
    VertexSet d = 0;
    for (int y = 0; y < n; ++y)
        if (le(y, x)) d |= vbit(y);
    return d;
}

VertexSet Poset::upper_covers(int x) const {
    VertexSet strict_up = leq[x] & ~vbit(x);
    VertexSet covers = 0;
    VertexSet rest = strict_up;
    while (rest) {
        int y = lowest_vertex(rest);
        rest &= rest - 1;
        // y covers x iff nothing sits strictly between them
        if ((downset(y) & strict_up & ~vbit(y)) == 0) covers |= vbit(y);
    }
    return covers;
}

Poset chain_poset(int n) {
    Poset p;
    p.n = n;
    for (int x = 0; x < n; ++x) p.leq[x] = full_set(n) & ~full_set(x);
    return p;
}

Poset antichain_poset(int n) {
    Poset p;
    p.n = n;
    for (int x = 0; x < n; ++x) p.leq[x] = vbit(x);
    return p;
}

bool check_poset_invariants(const Poset& p) {
    if (p.n < 0 || p.n > kMaxVertices) return false;
    for (int x = 0; x < p.n; ++x) {
        if (p.leq[x] & ~full_set(p.n)) return false;
        if (!p.le(x, x)) return false;
        for (int y = 0; y < p.n; ++y) {
            if (x != y && p.le(x, y) && p.le(y, x)) return false;   // antisymmetry
            if (p.le(x, y) && (p.leq[y] & ~p.leq[x])) return false;  // transitivity
        }
    }
    return true;
}

Graph comparability_graph(const Poset& p) {
    Graph g = empty_graph(p.n);
    for (int x = 0; x < p.n; ++x) {
        VertexSet up = p.leq[x] & ~vbit(x);
        while (up) {
            int y = lowest_vertex(up);
            up &= up - 1;
            g.add_edge(x, y);
        }
    }
    return g;
}

bool obstructs_comparability(const Graph& g) { return has_induced_c5(g); }

namespace {

// Equitable-style refinement of elements into classes ordered by invariant
// signatures; isomorphic posets get identically ordered classes.
std::vector<int> element_classes(const Poset& p, std::vector<int>& class_of) {
    int n = p.n;
    class_of.assign(n, 0);
    struct Sig {
        std::vector<int> v;
        bool operator<(const Sig& o) const { return v < o.v; }
        bool operator==(const Sig& o) const { return v == o.v; }
    };
    // seed: (|downset|, |upset|)
    {
        std::vector<std::pair<Sig, int>> sigs;
        for (int x = 0; x < n; ++x)
            sigs.push_back({Sig{{popcount(p.downset(x)), popcount(p.leq[x])}}, x});
        std::sort(sigs.begin(), sigs.end());
        int cls = -1;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            if (i == 0 || !(sigs[i].first == sigs[i - 1].first)) ++cls;
            class_of[sigs[i].second] = cls;
        }
    }
    while (true) {
        std::vector<std::pair<Sig, int>> sigs;
        for (int x = 0; x < n; ++x) {
            Sig s;
            s.v.push_back(class_of[x]);
            std::vector<int> down, up;
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (p.le(y, x)) down.push_back(class_of[y]);
                if (p.le(x, y)) up.push_back(class_of[y]);
            }
            std::sort(down.begin(), down.end());
            std::sort(up.begin(), up.end());
            s.v.push_back(-1);
            s.v.insert(s.v.end(), down.begin(), down.end());
            s.v.push_back(-1);
            s.v.insert(s.v.end(), up.begin(), up.end());
            sigs.push_back({std::move(s), x});
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> next(n);
        int cls = -1;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            if (i == 0 || !(sigs[i].first == sigs[i - 1].first)) ++cls;
            next[sigs[i].second] = cls;
        }
        if (next == class_of) break;
        class_of = std::move(next);
    }
    // required class id for each canonical position
    std::vector<int> wanted(n);
    {
        std::vector<int> sorted = class_of;
        std::sort(sorted.begin(), sorted.end());
        wanted = sorted;
    }
    return wanted;
}

std::uint64_t relation_code(const Poset& p, const int* pos_of) {
    std::uint64_t code = 0;
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (x != y && p.le(x, y))
                code |= 1ull << (pos_of[x] * p.n + pos_of[y]);
    return code;
}

}  // namespace

std::uint64_t poset_canonical_key(const Poset& p) {
    int n = p.n;
    if (n == 0) return 0;
    if (n > 8) throw std::invalid_argument("poset_canonical_key: supported up to 8 elements");
    std::vector<int> class_of;
    std::vector<int> wanted = element_classes(p, class_of);

    std::uint64_t best = ~0ull;
    int image[kMaxVertices];  // canonical position -> element
    int pos_of[kMaxVertices];
    VertexSet used = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            for (int i = 0; i < n; ++i) pos_of[image[i]] = i;
            std::uint64_t code = relation_code(p, pos_of);
            if (code < best) best = code;
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (used & vbit(x)) continue;
            if (class_of[x] != wanted[depth]) continue;
            used |= vbit(x);
            image[depth] = x;
            self(self, depth + 1);
            used &= ~vbit(x);
        }
    };
    rec(rec, 0);
    return best;
}

std::uint64_t enumerate_posets(int n, const std::function<void(const Poset&)>& sink) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_posets: supported range is 1..8");
    std::vector<Poset> level = {chain_poset(1)};
    if (n == 1) {
        if (sink) sink(level[0]);
        return 1;
    }
    for (int size = 2; size <= n; ++size) {
        std::vector<Poset> next;
        std::set<std::uint64_t> seen;
        for (const Poset& p : level) {
            // order ideals of p: down-closed subsets
            for (unsigned s = 0; s < (1u << p.n); ++s) {
                bool ideal = true;
                for (int x = 0; x < p.n && ideal; ++x)
                    if ((s >> x) & 1u)
                        if (p.downset(x) & ~static_cast<VertexSet>(s)) ideal = false;
                if (!ideal) continue;
                Poset child = p;
                child.n = p.n + 1;
                int z = p.n;
                child.leq[z] = vbit(z);
                for (int y = 0; y < p.n; ++y)
                    if ((s >> y) & 1u) child.leq[y] |= vbit(z);
                if (seen.insert(poset_canonical_key(child)).second) next.push_back(child);
            }
        }
        level = std::move(next);
    }
    if (sink)
        for (const Poset& p : level) sink(p);
    return level.size();
}

bool verify_small_posets(int n) {
    for (int size = 1; size <= n; ++size) {
        bool ok = true;
        enumerate_posets(size, [&](const Poset& p) {
            if (has_h1_torsion(comparability_graph(p))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

void save_poset(const Poset& p, std::ostream& out) {
    out << p.n << '\n';
    for (int x = 0; x < p.n; ++x) {
        VertexSet covers = p.upper_covers(x);
        bool first = true;
        while (covers) {
            int y = lowest_vertex(covers);
            covers &= covers - 1;
            if (!first) out << ' ';
            out << y;
            first = false;
        }
        out << '\n';
    }
}

}  // namespace ftor
