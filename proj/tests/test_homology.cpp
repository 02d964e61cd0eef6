#include "ftor/homology.hpp"

#include <cstdio>
#include <map>
#include <random>

#include "doctest.h"
#include "ftor/canon.hpp"
#include "ftor/generate.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ftor;
using namespace ftor::testutil;

namespace {

Graph octahedron() {
    Graph m = empty_graph(6);
    m.add_edge(0, 1);
    m.add_edge(2, 3);
    m.add_edge(4, 5);
    return complement(m);
}

// Multiset of prime-power components, the group-level normal form that
// disjoint unions add up in.
std::map<long long, int> primary_components(const std::vector<long long>& factors) {
    std::map<long long, int> out;
    for (long long d : factors) {
        for (long long p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            long long q = 1;
            while (d % p == 0) {
                d /= p;
                q *= p;
            }
            ++out[q];
        }
        if (d > 1) ++out[d];
    }
    return out;
}

}  // namespace

TEST_CASE("clique_complex facets") {
    SimplicialComplex full = clique_complex(complete_graph(4));
    CHECK(full.facets == std::vector<VertexSet>{0b1111});

    SimplicialComplex trunc = clique_complex(complete_graph(4), 2);
    CHECK(trunc.facets.size() == 4);
    for (VertexSet f : trunc.facets) CHECK(popcount(f) == 3);

    SimplicialComplex c5 = clique_complex(cycle_graph(5));
    CHECK(c5.facets.size() == 5);
    for (VertexSet f : c5.facets) CHECK(popcount(f) == 2);

    Graph with_isolated = empty_graph(3);
    with_isolated.add_edge(0, 1);
    SimplicialComplex ci = clique_complex(with_isolated);
    CHECK(ci.facets == std::vector<VertexSet>{0b011, 0b100});
}

TEST_CASE("make_complex drops dominated faces and orders tuple-lex") {
    SimplicialComplex c = make_complex(4, {0b0011, 0b0111, 0b0100, 0b1000, 0b0111});
    CHECK(c.facets == std::vector<VertexSet>{0b0111, 0b1000});
    CHECK(dimension(c) == 2);
    CHECK(tuple_lex_less(0b0111, 0b0101));   // {0,1,2} < {0,2}
    CHECK(tuple_lex_less(0b0011, 0b0111));   // {0,1} < {0,1,2}
    CHECK_FALSE(tuple_lex_less(0b0101, 0b0111));
}

TEST_CASE("boundary of a single edge") {
    SimplicialComplex c = make_complex(2, {0b11});
    IntMatrix d1 = boundary_matrix(1, c);
    REQUIRE(d1.rows == 2);
    REQUIRE(d1.cols == 1);
    CHECK(d1.at(0, 0) == -1);
    CHECK(d1.at(1, 0) == 1);
}

TEST_CASE("boundary of a triangle against lex-ordered edges") {
    SimplicialComplex c = make_complex(3, {0b111});
    IntMatrix d2 = boundary_matrix(2, c);
    REQUIRE(d2.rows == 3);
    REQUIRE(d2.cols == 1);
    CHECK(d2.at(0, 0) == 1);   // {0,1}
    CHECK(d2.at(1, 0) == -1);  // {0,2}
    CHECK(d2.at(2, 0) == 1);   // {1,2}
}

TEST_CASE("boundary composed with boundary vanishes on random clique complexes") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.6);
        SimplicialComplex c = clique_complex(g);
        for (int k = 1; k + 1 <= dimension(c); ++k) {
            IntMatrix a = boundary_matrix(k, c);
            IntMatrix b = boundary_matrix(k + 1, c);
            for (int i = 0; i < a.rows; ++i)
                for (int j = 0; j < b.cols; ++j) {
                    long long sum = 0;
                    for (int t = 0; t < a.cols; ++t) sum += a.at(i, t) * b.at(t, j);
                    CHECK(sum == 0);
                }
        }
    }
}

TEST_CASE("homology of basic complexes") {
    CHECK(homology(clique_complex(cycle_graph(5)), 1) == HomologyGroup{1, {}});
    CHECK(homology(clique_complex(complete_graph(4)), 1) == HomologyGroup{0, {}});
    CHECK(homology(clique_complex(complete_graph(4)), 0) == HomologyGroup{1, {}});
    CHECK(homology(clique_complex(complete_graph(4)), 2) == HomologyGroup{0, {}});
    // Octahedron boundary: a 2-sphere.
    SimplicialComplex sphere = clique_complex(octahedron());
    CHECK(homology(sphere, 0) == HomologyGroup{1, {}});
    CHECK(homology(sphere, 1) == HomologyGroup{0, {}});
    CHECK(homology(sphere, 2) == HomologyGroup{1, {}});
    // Icosahedron boundary, another 2-sphere.
    SimplicialComplex ico = oracles::icosahedron_complex();
    CHECK(ico.facets.size() == 20);
    CHECK(homology(ico, 1) == HomologyGroup{0, {}});
    CHECK(homology(ico, 2) == HomologyGroup{1, {}});
}

TEST_CASE("the icosahedron quotient is the 6-vertex projective plane") {
    SimplicialComplex rp2 = oracles::rp2_complex();
    CHECK(rp2.facets.size() == 10);
    CHECK(faces_of_dim(rp2, 1).size() == 15);
    CHECK(faces_of_dim(rp2, 0).size() == 6);

    // The antipodal relabeling must be a face-to-face symmetry and no face
    // may contain an antipodal pair, otherwise the quotient is not RP2.
    SimplicialComplex ico = oracles::icosahedron_complex();
    int sigma[12] = {11, 9, 10, 6, 7, 8, 3, 4, 5, 1, 2, 0};
    for (VertexSet f : ico.facets) {
        VertexSet mapped = 0;
        VertexSet rest = f;
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            CHECK((f & vbit(sigma[v])) == 0);
            mapped |= vbit(sigma[v]);
        }
        CHECK(std::find(ico.facets.begin(), ico.facets.end(), mapped) != ico.facets.end());
    }

    CHECK(homology(rp2, 0) == HomologyGroup{1, {}});
    CHECK(homology(rp2, 1) == HomologyGroup{0, {2}});
    CHECK(homology(rp2, 2) == HomologyGroup{0, {}});

    // Independent oracle route for the torsion: naive SNF of d2.
    std::vector<long long> factors = oracles::naive_snf_factors(boundary_matrix(2, rp2));
    CHECK(factors.size() == 10);
    CHECK(factors.back() == 2);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) CHECK(factors[i] == 1);
}

TEST_CASE("h1_clique basics") {
    CHECK(h1_clique(cycle_graph(4)) == HomologyGroup{1, {}});
    CHECK(h1_clique(cycle_graph(5)) == HomologyGroup{1, {}});
    CHECK(h1_clique(complete_graph(4)) == HomologyGroup{0, {}});
    CHECK_FALSE(has_h1_torsion(cycle_graph(5)));
    CHECK(h1_nontrivial(cycle_graph(5)));
    CHECK_FALSE(h1_nontrivial(complete_graph(4)));
}

TEST_CASE("h1 of every graph on at most 3 vertices is trivial") {
    for (int n = 1; n <= 3; ++n)
        generate_all(n, 0, n - 1, [](const Graph& g) { CHECK(h1_clique(g).trivial()); });
}

TEST_CASE("truncated and full clique complexes have equal H1 for all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        generate_all(n, 0, n - 1, [](const Graph& g) {
            HomologyGroup full = homology(clique_complex(g), 1);
            HomologyGroup trunc = homology(clique_complex(g, 2), 1);
            HomologyGroup fast = h1_clique(g);
            CHECK(full == trunc);
            CHECK(full == fast);
        });
    }
}

TEST_CASE("Euler characteristic consistency on 2-truncations for all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        generate_all(n, 0, n - 1, [](const Graph& g) {
            SimplicialComplex c = clique_complex(g, 2);
            long long v = static_cast<long long>(faces_of_dim(c, 0).size());
            long long e = static_cast<long long>(faces_of_dim(c, 1).size());
            long long t = static_cast<long long>(faces_of_dim(c, 2).size());
            long long b0 = homology(c, 0).betti;
            long long b1 = homology(c, 1).betti;
            long long b2 = homology(c, 2).betti;
            CHECK(v - e + t == b0 - b1 + b2);
        });
    }
}

TEST_CASE("h1_clique is invariant under relabeling") {
    std::mt19937 rng(606);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.5);
        CHECK(h1_clique(g) == h1_clique(random_relabel(rng, g)));
    }
}

TEST_CASE("H1 of a disjoint union is the direct sum") {
    auto disjoint_union = [](const SimplicialComplex& a, const SimplicialComplex& b) {
        std::vector<VertexSet> faces = a.facets;
        for (VertexSet f : b.facets) faces.push_back(static_cast<VertexSet>(f << a.n));
        return make_complex(a.n + b.n, std::move(faces));
    };
    std::mt19937 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 4), 0.5);
        Graph h = random_graph(rng, 3 + static_cast<int>(rng() % 4), 0.5);
        HomologyGroup hg = homology(clique_complex(g), 1);
        HomologyGroup hh = homology(clique_complex(h), 1);
        HomologyGroup hu = homology(disjoint_union(clique_complex(g), clique_complex(h)), 1);
        CHECK(hu.betti == hg.betti + hh.betti);
        auto merged = primary_components(hg.torsion);
        for (auto [q, m] : primary_components(hh.torsion)) merged[q] += m;
        CHECK(primary_components(hu.torsion) == merged);
    }
    // A pair with genuine torsion: two copies of the projective plane.
    SimplicialComplex rp2 = oracles::rp2_complex();
    HomologyGroup duo = homology(disjoint_union(rp2, rp2), 1);
    CHECK(duo.betti == 0);
    CHECK(duo.torsion == std::vector<long long>{2, 2});
}

TEST_CASE("a vertex of degree at least n-3 forces torsion-free H1, exhaustively to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        generate_all(n, 0, n - 1, [&](const Graph& g) {
            int maxdeg = 0;
            for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
            if (maxdeg >= n - 3) CHECK_FALSE(has_h1_torsion(g));
        });
    }
}

TEST_CASE("high-degree vertex implies torsion-free H1 on random 8- and 9-vertex graphs") {
    std::mt19937 rng(4096);
    for (int n = 8; n <= 9; ++n) {
        for (int rep = 0; rep < 300; ++rep) {
            Graph g = random_graph(rng, n, 0.55);
            // Force one vertex to degree >= n-3.
            for (int u = 1; u < n - 2; ++u) g.add_edge(0, u);
            CHECK_FALSE(has_h1_torsion(g));
        }
    }
}

TEST_CASE("facet file round trip") {
    SimplicialComplex rp2 = oracles::rp2_complex();
    std::string path = "rp2_facets_test.txt";
    save_facets(rp2, path);
    SimplicialComplex back = load_facets(path);
    CHECK(back.facets == rp2.facets);
    CHECK(homology(back, 1) == HomologyGroup{0, {2}});
    std::remove(path.c_str());
}

TEST_CASE("homology group pretty printer") {
    CHECK(HomologyGroup{0, {}}.to_string() == "0");
    CHECK(HomologyGroup{1, {}}.to_string() == "Z");
    CHECK(HomologyGroup{2, {2}}.to_string() == "Z^2 + Z/2");
    CHECK(HomologyGroup{0, {2, 4}}.to_string() == "Z/2 + Z/4");
}
