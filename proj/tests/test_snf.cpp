#include "ftor/snf.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace ftor;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int maxdim, int maxabs) {
    int r = 1 + static_cast<int>(rng() % maxdim);
    int c = 1 + static_cast<int>(rng() % maxdim);
    IntMatrix m(r, c);
    std::uniform_int_distribution<int> entry(-maxabs, maxabs);
    for (long long& v : m.a) v = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("smith_normal_form of the zero matrix") {
    SnfResult s = smith_normal_form(IntMatrix(3, 4));
    CHECK(s.rank == 0);
    CHECK(s.factors.empty());
}

TEST_CASE("smith_normal_form of diag(2,3) is rank 2 with factors (1,6)") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    SnfResult s = smith_normal_form(m);
    CHECK(s.rank == 2);
    CHECK(s.factors == std::vector<long long>{1, 6});
}

TEST_CASE("smith_normal_form hand-checked 2x2") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SnfResult s = smith_normal_form(m);
    CHECK(s.rank == 2);
    CHECK(s.factors == std::vector<long long>{2, 4});  // gcd 2, |det| 8
}

TEST_CASE("smith_normal_form matches the naive oracle on random matrices") {
    std::mt19937 rng(2718);
    for (int rep = 0; rep < 2000; ++rep) {
        IntMatrix m = random_matrix(rng, 8, 9);
        SnfResult s = smith_normal_form(m);
        CHECK(s.factors == oracles::naive_snf_factors(m));
        CHECK(s.rank == static_cast<int>(s.factors.size()));
    }
}

TEST_CASE("smith_normal_form matches the determinantal-divisor oracle on small matrices") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 400; ++rep) {
        IntMatrix m = random_matrix(rng, 4, 9);
        CHECK(smith_normal_form(m).factors == oracles::minors_snf_factors(m));
    }
}

TEST_CASE("invariant factors form a divisibility chain") {
    std::mt19937 rng(555);
    for (int rep = 0; rep < 500; ++rep) {
        IntMatrix m = random_matrix(rng, 7, 30);
        SnfResult s = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
            CHECK(s.factors[i] >= 1);
            CHECK(s.factors[i + 1] % s.factors[i] == 0);
        }
    }
}

TEST_CASE("matrix_rank agrees with factor count") {
    std::mt19937 rng(808);
    for (int rep = 0; rep < 300; ++rep) {
        IntMatrix m = random_matrix(rng, 7, 9);
        CHECK(matrix_rank(m) == smith_normal_form(m).rank);
    }
}

TEST_CASE("word overflow restarts the reduction in big integers") {
    // Pivot 1, so clearing the first column multiplies (2^32+2) by 2^31 and
    // overflows int64; the final invariant factors still fit.
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1ll << 31;
    m.at(1, 0) = (1ll << 32) + 2;
    m.at(1, 1) = 0x7fffffffffffffffll;
    SnfResult s = smith_normal_form(m);
    CHECK(s.escalated);
    CHECK(s.rank == 2);
    CHECK(s.factors == std::vector<long long>{1, (1ll << 32) + 1});
    CHECK(s.factors == oracles::naive_snf_factors(m));
}
