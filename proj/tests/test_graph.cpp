#include "ftor/graph.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ftor/canon.hpp"
#include "ftor/generate.hpp"
#include "test_util.hpp"

using namespace ftor;
using namespace ftor::testutil;

TEST_CASE("graph6 decodes A_ to the single edge on two vertices") {
    Graph g = from_graph6("A_");
    CHECK(g.n == 2);
    CHECK(g.edge(0, 1));
    CHECK(to_graph6(g) == "A_");
}

TEST_CASE("graph6 header-only line gives the one-vertex graph") {
    Graph g = from_graph6("@");
    CHECK(g.n == 1);
    CHECK(g.adj[0] == 0);
}

TEST_CASE("graph6 of the edgeless 5-vertex graph is D followed by zero payload") {
    CHECK(to_graph6(empty_graph(5)) == "D??");
}

TEST_CASE("graph6 rejects malformed input with a diagnostic") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(":Fa@x^"), std::invalid_argument);   // sparse6
    CHECK_THROWS_AS(from_graph6("~~~"), std::invalid_argument);      // long form
    CHECK_THROWS_AS(from_graph6("D?"), std::invalid_argument);       // truncated
    CHECK_THROWS_AS(from_graph6("D???"), std::invalid_argument);     // overlong
    CHECK_THROWS_AS(from_graph6("A\x1f"), std::invalid_argument);    // low byte
    CHECK_THROWS_AS(from_graph6("Z??????????"), std::invalid_argument);  // n = 27 > 16
    CHECK_THROWS_AS(from_graph6("A@"), std::invalid_argument);       // fine
    CHECK_THROWS_AS(from_graph6("AG"), std::invalid_argument);       // nonzero padding
    CHECK(from_graph6("A?").n == 2);
}

TEST_CASE("graph6 round trip over every labeled 4-vertex graph") {
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        Graph g = graph_from_edge_bits(4, bits);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 round trip on random graphs up to 16 vertices") {
    std::mt19937 rng(12345);
    for (int n = 1; n <= 16; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            Graph g = random_graph(rng, n);
            Graph back = from_graph6(to_graph6(g));
            CHECK(back == g);
        }
    }
}

TEST_CASE("complement of K5 is edgeless and C5 is self-complementary") {
    CHECK(complement(complete_graph(5)) == empty_graph(5));
    CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 16));
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(induced(complete_graph(5), 0b10101) == complete_graph(3));
    CHECK(induced(cycle_graph(6), 0b010101) == empty_graph(3));
    CHECK(induced(complete_graph(4), 0) == empty_graph(0));
}

TEST_CASE("induced commutes with relabeling up to isomorphism") {
    std::mt19937 rng(88);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 4 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n);
        int perm[kMaxVertices];
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm, perm + n, rng);
        Graph h = apply_perm(g, perm);
        VertexSet s = static_cast<VertexSet>(rng() & full_set(n));
        VertexSet mapped = 0;
        for (int v = 0; v < n; ++v)
            if (s & vbit(v)) mapped |= vbit(perm[v]);
        if (popcount(s) == 0) continue;
        CHECK(are_isomorphic(induced(g, s), induced(h, mapped)));
    }
}

TEST_CASE("the Petersen graph has a 5-subset inducing C5") {
    Graph p = petersen_graph();
    bool found = false;
    for (unsigned s = 0; s < 1024u && !found; ++s) {
        VertexSet mask = static_cast<VertexSet>(s);
        if (popcount(mask) != 5) continue;
        if (are_isomorphic(induced(p, mask), cycle_graph(5))) found = true;
    }
    CHECK(found);
    CHECK(are_isomorphic(induced(p, 0b0000011111), cycle_graph(5)));
}

TEST_CASE("delete_vertex") {
    CHECK(are_isomorphic(delete_vertex(complete_graph(4), 2), complete_graph(3)));
    CHECK(are_isomorphic(delete_vertex(cycle_graph(5), 0), path_graph(4)));
    for (int v = 0; v < 5; ++v) CHECK(delete_vertex(cycle_graph(5), v).n == 4);
    CHECK_THROWS_AS(delete_vertex(complete_graph(4), 4), std::out_of_range);
    CHECK_THROWS_AS(delete_vertex(complete_graph(4), -1), std::out_of_range);
}

TEST_CASE("link_padded") {
    Graph k5link = link_padded(complete_graph(5), 2);
    CHECK(k5link.n == 5);
    CHECK(are_isomorphic(induced(k5link, 0b01111), complete_graph(4)));
    CHECK(k5link.degree(4) == 0);

    Graph star = empty_graph(5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    CHECK(link_padded(star, 0) == empty_graph(5));

    // Octahedron = K_{2,2,2} = complement of a perfect matching on 6 vertices.
    Graph matching = empty_graph(6);
    matching.add_edge(0, 1);
    matching.add_edge(2, 3);
    matching.add_edge(4, 5);
    Graph octa = complement(matching);
    Graph expect = cycle_graph(4);
    expect.n = 6;
    for (int v = 0; v < 6; ++v) CHECK(are_isomorphic(link_padded(octa, v), expect));
}

TEST_CASE("link_padded and delete_vertex outputs satisfy the graph invariants") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 2 + static_cast<int>(rng() % 15);
        Graph g = random_graph(rng, n);
        int v = static_cast<int>(rng() % n);
        CHECK(check_invariants(delete_vertex(g, v)));
        CHECK(check_invariants(link_padded(g, v)));
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete_graph(2)));
    Graph two_edges = empty_graph(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(is_connected(two_edges));
    CHECK(component_count(two_edges) == 2);
    CHECK(is_connected(empty_graph(1)));
    CHECK_FALSE(is_connected(empty_graph(2)));
}

TEST_CASE("cut_vertices") {
    CHECK(cut_vertices(path_graph(4)) == (vbit(1) | vbit(2)));
    CHECK(cut_vertices(cycle_graph(5)) == 0);
    Graph star = empty_graph(5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    CHECK(cut_vertices(star) == vbit(0));
    // Two triangles sharing one vertex.
    Graph bowtie = empty_graph(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(2, 0);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(4, 2);
    CHECK(cut_vertices(bowtie) == vbit(2));
}

TEST_CASE("cut_vertices agrees with deletion-based brute force") {
    auto brute = [](const Graph& g) {
        // Removing a cut vertex strictly increases the component count.
        VertexSet cuts = 0;
        int base = component_count(g);
        for (int v = 0; v < g.n; ++v)
            if (component_count(delete_vertex(g, v)) > base) cuts |= vbit(v);
        return cuts;
    };
    std::mt19937 rng(123);
    for (int rep = 0; rep < 300; ++rep) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_graph(rng, n, 0.4);
        CHECK(cut_vertices(g) == brute(g));
    }
    for (int n = 2; n <= 6; ++n)
        generate_all(n, 0, n - 1, [&](const Graph& g) { CHECK(cut_vertices(g) == brute(g)); });
}

TEST_CASE("is_tame") {
    CHECK_FALSE(is_tame(complete_graph(5)));
    CHECK_FALSE(is_tame(cycle_graph(7)));
    CHECK_FALSE(is_tame(complete_graph(7)));
    Graph k44 = empty_graph(8);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) k44.add_edge(u, v);
    CHECK(is_tame(k44));
}

TEST_CASE("has_induced_c5 basics") {
    CHECK(has_induced_c5(cycle_graph(5)));
    CHECK_FALSE(has_induced_c5(cycle_graph(6)));
    // Removing two vertices from C7 leaves two disjoint paths, never C5.
    CHECK_FALSE(has_induced_c5(cycle_graph(7)));
    CHECK(has_induced_c5(petersen_graph()));
    CHECK_FALSE(has_induced_c5(complete_graph(8)));
}

namespace {

// Independent 5-subset enumerator: no pruning, isomorphism test per subset.
bool naive_has_induced_c5(const Graph& g) {
    if (g.n < 5) return false;
    Graph c5 = cycle_graph(5);
    for (unsigned s = 0; s < (1u << g.n); ++s) {
        if (popcount(static_cast<VertexSet>(s)) != 5) continue;
        if (are_isomorphic(induced(g, static_cast<VertexSet>(s)), c5)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("has_induced_c5 agrees with the naive enumerator on all graphs up to 8 vertices") {
    for (int n = 5; n <= 8; ++n) {
        generate_all(n, 0, n - 1, [&](const Graph& g) {
            bool fast = has_induced_c5(g);
            bool slow = naive_has_induced_c5(g);
            CHECK(fast == slow);
        });
    }
}
