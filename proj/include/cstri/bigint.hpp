#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "cstri/complex.hpp"

namespace cstri {

/// Minimal arbitrary-precision signed integer: sign + base-2^32 magnitude.
/// Supports exactly what integer elimination needs (compare, add, sub, mul,
/// truncated divmod). Not performance-tuned; it is the overflow fallback.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT: implicit by design, mirrors integer literals
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ULL;
            set_magnitude(m);
        } else {
            set_magnitude(static_cast<unsigned long long>(v));
        }
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }

    bool fits_long_long() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magnitude_u64();
        if (!neg_) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }

    long long to_long_long() const {
        if (!fits_long_long()) fail("overflow", "BigInt does not fit in long long");
        unsigned long long m = magnitude_u64();
        if (neg_) return -static_cast<long long>(m - 1) - 1;
        return static_cast<long long>(m);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.neg_ = b.neg_;
        }
        if (r.mag_.empty()) r.neg_ = false;
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    /// Truncated division (C semantics): quotient rounds toward zero and
    /// the remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) fail("overflow", "BigInt division by zero");
        q = BigInt();
        r = BigInt();
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            r = a;
            return;
        }
        // bit-by-bit schoolbook long division on magnitudes
        std::vector<std::uint32_t> rem;
        std::vector<std::uint32_t> quo(a.mag_.size(), 0);
        for (std::size_t word = a.mag_.size(); word-- > 0;) {
            for (int bit = 31; bit >= 0; --bit) {
                shift_left_one(rem);
                if ((a.mag_[word] >> bit) & 1u) {
                    if (rem.empty()) rem.push_back(1);
                    else rem[0] |= 1u;
                }
                if (cmp_mag(rem, b.mag_) >= 0) {
                    rem = sub_mag(rem, b.mag_);
                    quo[word] |= (1u << bit);
                }
            }
        }
        q.mag_ = std::move(quo);
        q.trim();
        r.mag_ = std::move(rem);
        r.trim();
        q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
        r.neg_ = !r.mag_.empty() && a.neg_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt ten(10);
        BigInt cur = abs();
        std::string digits;
        while (!cur.is_zero()) {
            BigInt q, r;
            divmod(cur, ten, q, r);
            const long long d = r.mag_.empty() ? 0 : r.mag_[0];
            digits.push_back(static_cast<char>('0' + d));
            cur = q;
        }
        if (neg_) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    void set_magnitude(unsigned long long m) {
        mag_.clear();
        while (m) {
            mag_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }

    unsigned long long magnitude_u64() const {
        unsigned long long m = 0;
        if (!mag_.empty()) m = mag_[0];
        if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out;
        out.reserve(std::max(a.size(), b.size()) + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            out.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) out.push_back(static_cast<std::uint32_t>(carry));
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[i] = static_cast<std::uint32_t>(cur);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    static void shift_left_one(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& w : m) {
            std::uint32_t next = w >> 31;
            w = (w << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    bool neg_ = false;
    std::vector<std::uint32_t> mag_;  // little-endian, trimmed
};

}  // namespace cstri
