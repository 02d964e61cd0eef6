#include "ftor/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftor {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ull - static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u));
        u >>= 32;
    }
}

void BigInt::trim(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += 1ll << 32;
            borrow = 1;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    trim(out);
    return out;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.mag_.size(); ++j) {
            std::uint64_t cur = r.mag_[i + j] +
                                static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.mag_.size();
        while (carry) {
            std::uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r.mag_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    std::vector<std::uint32_t> quot, rem;
    if (b.mag_.size() == 1) {
        // single-limb divisor: one pass of schoolbook division
        std::uint64_t d = b.mag_[0];
        quot.assign(a.mag_.size(), 0);
        std::uint64_t cur = 0;
        for (std::size_t i = a.mag_.size(); i-- > 0;) {
            cur = (cur << 32) | a.mag_[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            cur %= d;
        }
        if (cur) rem.push_back(static_cast<std::uint32_t>(cur));
        trim(quot);
    } else {
        // bit-by-bit long division; divisors this wide are rare here
        quot.assign(a.mag_.size(), 0);
        std::vector<std::uint32_t> cur;
        for (std::size_t i = a.mag_.size() * 32; i-- > 0;) {
            // cur = cur*2 + bit i of |a|
            std::uint32_t carry = (a.mag_[i / 32] >> (i % 32)) & 1u;
            for (std::size_t j = 0; j < cur.size(); ++j) {
                std::uint32_t next = cur[j] >> 31;
                cur[j] = (cur[j] << 1) | carry;
                carry = next;
            }
            if (carry) cur.push_back(carry);
            if (cmp_mag(cur, b.mag_) >= 0) {
                cur = sub_mag(cur, b.mag_);
                quot[i / 32] |= 1u << (i % 32);
            }
        }
        rem = cur;
        trim(quot);
        trim(rem);
    }
    q = BigInt();
    if (!quot.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.mag_ = std::move(quot);
    }
    r = BigInt();
    if (!rem.empty()) {
        r.sign_ = a.sign_;  // remainder carries the dividend's sign (truncation)
        r.mag_ = std::move(rem);
    }
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

bool BigInt::abs_less(const BigInt& a, const BigInt& b) { return cmp_mag(a.mag_, b.mag_) < 0; }

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    unsigned long long u = (static_cast<unsigned long long>(mag_[1]) << 32) | mag_[0];
    return sign_ > 0 ? u <= 0x7fffffffffffffffull : u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value exceeds int64 range");
    unsigned long long u = 0;
    if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
    if (!mag_.empty()) u |= mag_[0];
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    std::vector<std::uint32_t> m = mag_;
    while (!m.empty()) {
        std::uint64_t cur = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            cur = (cur << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 10);
            cur %= 10;
        }
        digits.push_back(static_cast<char>('0' + cur));
        trim(m);
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace ftor
