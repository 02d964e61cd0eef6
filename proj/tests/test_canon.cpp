#include "ftor/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ftor/generate.hpp"
#include "test_util.hpp"

using namespace ftor;
using namespace ftor::testutil;

TEST_CASE("canonical_form is invariant under relabeling of C5") {
    Graph a = cycle_graph(5);                 // 0-1-2-3-4
    Graph b = empty_graph(5);                 // 0-2-4-1-3
    b.add_edge(0, 2);
    b.add_edge(2, 4);
    b.add_edge(4, 1);
    b.add_edge(1, 3);
    b.add_edge(3, 0);
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("canonical_form separates K3 plus isolated vertex from P4") {
    Graph k3_iso = empty_graph(4);
    k3_iso.add_edge(0, 1);
    k3_iso.add_edge(1, 2);
    k3_iso.add_edge(2, 0);
    CHECK(canonical_form(k3_iso) != canonical_form(path_graph(4)));
}

TEST_CASE("canonical graph is isomorphic to the input and stable under re-canonicalization") {
    std::mt19937 rng(4242);
    for (int rep = 0; rep < 300; ++rep) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n);
        CanonResult r = canon_full(g);
        CHECK(check_invariants(r.canonical));
        CHECK(certificate(r.canonical) == r.cert);
        CHECK(canon_full(r.canonical).cert == r.cert);
        CHECK(are_isomorphic(g, r.canonical));
    }
}

namespace {

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n) return false;
    int perm[kMaxVertices];
    std::iota(perm, perm + g.n, 0);
    do {
        if (apply_perm(g, perm) == h) return true;
    } while (std::next_permutation(perm, perm + g.n));
    return false;
}

// Orbit partition from the full automorphism group, by brute force.
std::vector<int> brute_force_orbits(const Graph& g) {
    std::vector<int> rep(g.n);
    std::iota(rep.begin(), rep.end(), 0);
    int perm[kMaxVertices];
    std::iota(perm, perm + g.n, 0);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    do {
        if (apply_perm(g, perm) == g) {
            for (int v = 0; v < g.n; ++v) {
                int a = find(v), b = find(perm[v]);
                if (a != b) rep[std::max(a, b)] = std::min(a, b);
            }
        }
    } while (std::next_permutation(perm, perm + g.n));
    std::vector<int> out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = find(v);
    return out;
}

}  // namespace

TEST_CASE("are_isomorphic agrees with factorial-time search on all class pairs up to 6 vertices") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Graph> classes;
        generate_all(n, 0, n - 1, [&](const Graph& g) { classes.push_back(g); });
        std::mt19937 rng(777 + n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            // Same class, scrambled labels: must be isomorphic both ways.
            Graph scrambled = random_relabel(rng, classes[i]);
            CHECK(are_isomorphic(classes[i], scrambled));
            CHECK(brute_force_isomorphic(classes[i], scrambled));
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                bool fast = are_isomorphic(classes[i], classes[j]);
                bool slow = brute_force_isomorphic(classes[i], classes[j]);
                CHECK(fast == slow);
                CHECK_FALSE(fast);  // distinct generated classes
            }
        }
    }
}

TEST_CASE("automorphism orbits match brute force on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        generate_all(n, 0, n - 1, [&](const Graph& g) {
            CanonResult r = canon_full(g);
            std::vector<int> expect = brute_force_orbits(g);
            for (int v = 0; v < n; ++v) CHECK(static_cast<int>(r.orbit[v]) == expect[v]);
        });
    }
}

TEST_CASE("automorphism orbits match brute force on random 7- and 8-vertex graphs") {
    std::mt19937 rng(1618);
    for (int n = 7; n <= 8; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            // Sparser graphs have richer automorphism groups.
            Graph g = random_graph(rng, n, 0.25 + 0.1 * (rng() % 3));
            CanonResult r = canon_full(g);
            std::vector<int> expect = brute_force_orbits(g);
            for (int v = 0; v < n; ++v) CHECK(static_cast<int>(r.orbit[v]) == expect[v]);
        }
    }
}

TEST_CASE("label invariance on random relabelings for every n up to 12") {
    std::mt19937 rng(2024);
    for (int n = 1; n <= 12; ++n) {
        for (int rep = 0; rep < 100; ++rep) {
            Graph g = random_graph(rng, n);
            Graph h = random_relabel(rng, g);
            CHECK(canon_full(g).cert == canon_full(h).cert);
        }
    }
}

TEST_CASE("distinct codes over the full labeled 6-vertex space number 156") {
    std::set<std::string> codes;
    for (std::uint32_t bits = 0; bits < (1u << 15); ++bits)
        codes.insert(canonical_form(graph_from_edge_bits(6, bits)).bytes);
    CHECK(codes.size() == 156);
}

TEST_CASE("canonical labeling handles highly symmetric graphs quickly") {
    CHECK(canon_full(complete_graph(16)).orbit_count == 1);
    CHECK(canon_full(empty_graph(16)).orbit_count == 1);
    CHECK(canon_full(cycle_graph(16)).orbit_count == 1);
    CHECK(canon_full(petersen_graph()).orbit_count == 1);
    Graph k88 = empty_graph(16);
    for (int u = 0; u < 8; ++u)
        for (int v = 8; v < 16; ++v) k88.add_edge(u, v);
    CHECK(canon_full(k88).orbit_count == 1);
}

TEST_CASE("CanonicalSet membership and persistence") {
    CanonicalSet empty;
    CHECK_FALSE(empty.contains(cycle_graph(5)));

    std::mt19937 rng(5);
    Graph g = random_graph(rng, 9);
    CanonicalSet set = CanonicalSet::from_graphs({g, random_relabel(rng, g)});
    CHECK(set.size() == 1);
    for (int rep = 0; rep < 20; ++rep) CHECK(set.contains(random_relabel(rng, g)));
    CHECK_FALSE(set.contains(complete_graph(9)));

    std::string path = "canonset_test.g6";
    set.save(path);
    CanonicalSet back = CanonicalSet::load(path);
    CHECK(back.size() == set.size());
    CHECK(back.contains(g));
    std::remove(path.c_str());
}
