#ifndef FTOR_BIGINT_HPP
#define FTOR_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ftor {

// Sign-magnitude arbitrary-precision integer, base 2^32. Division truncates
// toward zero, matching built-in integer division, so the Smith reduction
// code can be shared between the checked-word and big-integer paths.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors built-in ints

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return sign_; }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

    // |a| < |b|, the comparison Smith pivot selection needs.
    static bool abs_less(const BigInt& a, const BigInt& b);

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error when out of range
    std::string to_string() const;

private:
    int sign_ = 0;                    // -1, 0, +1; zero iff mag_ empty
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void trim(std::vector<std::uint32_t>& m);
};

}  // namespace ftor

#endif
