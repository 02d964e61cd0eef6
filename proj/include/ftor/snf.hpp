#ifndef FTOR_SNF_HPP
#define FTOR_SNF_HPP

#include <vector>

#include "ftor/bigint.hpp"

namespace ftor {

// Dense exact integer matrix (boundary-map carrier).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

struct SnfResult {
    int rank = 0;
    std::vector<long long> factors;  // d1 | d2 | ... | d_rank, all >= 1
    bool escalated = false;          // machine words overflowed; redone in BigInt
};

// Smith normal form by unimodular row/column operations with minimal-pivot
// selection (ties: lowest row, then column). Runs in checked 64-bit words;
// any would-be overflow restarts the whole reduction in arbitrary precision.
SnfResult smith_normal_form(const IntMatrix& m);

// Rank over Q, same reduction without the divisibility fix-up.
int matrix_rank(const IntMatrix& m);

}  // namespace ftor

#endif
