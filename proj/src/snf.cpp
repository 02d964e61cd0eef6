#include "ftor/snf.hpp"

#include <stdexcept>
#include <utility>

namespace ftor {

namespace {

struct Overflow {};

// 64-bit integer whose arithmetic throws on overflow instead of wrapping.
struct Checked64 {
    long long v = 0;

    Checked64() = default;
    Checked64(long long x) : v(x) {}

    bool is_zero() const { return v == 0; }

    Checked64 operator-(const Checked64& o) const {
        Checked64 r;
        if (__builtin_sub_overflow(v, o.v, &r.v)) throw Overflow{};
        return r;
    }
    Checked64 operator+(const Checked64& o) const {
        Checked64 r;
        if (__builtin_add_overflow(v, o.v, &r.v)) throw Overflow{};
        return r;
    }
    Checked64 operator*(const Checked64& o) const {
        Checked64 r;
        if (__builtin_mul_overflow(v, o.v, &r.v)) throw Overflow{};
        return r;
    }
    Checked64 operator/(const Checked64& o) const {
        if (v == (-0x7fffffffffffffffll - 1) && o.v == -1) throw Overflow{};
        return Checked64(v / o.v);
    }
    Checked64 operator%(const Checked64& o) const {
        if (v == (-0x7fffffffffffffffll - 1) && o.v == -1) throw Overflow{};
        return Checked64(v % o.v);
    }

    static bool abs_less(const Checked64& a, const Checked64& b) {
        auto mag = [](long long x) {
            return x < 0 ? 0ull - static_cast<unsigned long long>(x)
                         : static_cast<unsigned long long>(x);
        };
        return mag(a.v) < mag(b.v);
    }
};

bool is_zero(const Checked64& x) { return x.is_zero(); }
bool is_zero(const BigInt& x) { return x.is_zero(); }

template <class T>
struct Reducer {
    int rows, cols;
    std::vector<T> m;

    T& at(int r, int c) { return m[static_cast<std::size_t>(r) * cols + c]; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < rows; ++r) std::swap(at(r, a), at(r, b));
    }
    // row r -= q * row s, columns >= from
    void row_sub(int r, int s, const T& q, int from) {
        for (int c = from; c < cols; ++c)
            if (!is_zero(at(s, c))) at(r, c) = at(r, c) - q * at(s, c);
    }
    void col_sub(int c, int s, const T& q, int from) {
        for (int r = from; r < rows; ++r)
            if (!is_zero(at(r, s))) at(r, c) = at(r, c) - q * at(r, s);
    }
    void row_add(int r, int s, int from) {
        for (int c = from; c < cols; ++c)
            if (!is_zero(at(s, c))) at(r, c) = at(r, c) + at(s, c);
    }

    bool find_min_pivot(int s, int& pr, int& pc) {
        pr = -1;
        pc = -1;
        for (int r = s; r < rows; ++r)
            for (int c = s; c < cols; ++c) {
                if (is_zero(at(r, c))) continue;
                if (pr == -1 || T::abs_less(at(r, c), at(pr, pc))) {
                    pr = r;
                    pc = c;
                }
            }
        return pr != -1;
    }

    // Returns |diagonal| entries in order; with_divisibility makes each
    // pivot divide the remaining submatrix, yielding the invariant factors.
    std::vector<T> reduce(bool with_divisibility) {
        std::vector<T> diag;
        int nmin = rows < cols ? rows : cols;
        for (int s = 0; s < nmin; ++s) {
            int pr, pc;
            if (!find_min_pivot(s, pr, pc)) break;
            swap_rows(s, pr);
            swap_cols(s, pc);
            while (true) {
                bool swapped = false;
                for (int r = s + 1; r < rows && !swapped; ++r) {
                    if (is_zero(at(r, s))) continue;
                    T q = at(r, s) / at(s, s);
                    if (!is_zero(q)) row_sub(r, s, q, s);
                    if (!is_zero(at(r, s))) {
                        swap_rows(r, s);
                        swapped = true;
                    }
                }
                if (swapped) continue;
                for (int c = s + 1; c < cols && !swapped; ++c) {
                    if (is_zero(at(s, c))) continue;
                    T q = at(s, c) / at(s, s);
                    if (!is_zero(q)) col_sub(c, s, q, s);
                    if (!is_zero(at(s, c))) {
                        swap_cols(c, s);
                        swapped = true;
                    }
                }
                if (swapped) continue;
                if (with_divisibility) {
                    bool fixed = false;
                    for (int r = s + 1; r < rows && !fixed; ++r)
                        for (int c = s + 1; c < cols && !fixed; ++c)
                            if (!is_zero(at(r, c) % at(s, s))) {
                                row_add(s, r, s + 1);  // column s of row r is zero
                                fixed = true;
                            }
                    if (fixed) continue;
                }
                break;
            }
            diag.push_back(at(s, s));
        }
        return diag;
    }
};

SnfResult run_checked(const IntMatrix& m, bool with_divisibility) {
    Reducer<Checked64> red{m.rows, m.cols, {}};
    red.m.assign(m.a.begin(), m.a.end());
    std::vector<Checked64> diag = red.reduce(with_divisibility);
    SnfResult res;
    res.rank = static_cast<int>(diag.size());
    for (const Checked64& d : diag) {
        long long v = d.v;
        if (v == (-0x7fffffffffffffffll - 1)) throw Overflow{};
        res.factors.push_back(v < 0 ? -v : v);
    }
    return res;
}

SnfResult run_bigint(const IntMatrix& m, bool with_divisibility) {
    Reducer<BigInt> red{m.rows, m.cols, {}};
    red.m.reserve(m.a.size());
    for (long long v : m.a) red.m.emplace_back(v);
    std::vector<BigInt> diag = red.reduce(with_divisibility);
    SnfResult res;
    res.rank = static_cast<int>(diag.size());
    res.escalated = true;
    for (const BigInt& d : diag) res.factors.push_back(d.abs().to_int64());
    return res;
}

SnfResult smith(const IntMatrix& m, bool with_divisibility) {
    try {
        return run_checked(m, with_divisibility);
    } catch (const Overflow&) {
        return run_bigint(m, with_divisibility);
    }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) { return smith(m, true); }

int matrix_rank(const IntMatrix& m) { return smith(m, false).rank; }

}  // namespace ftor
