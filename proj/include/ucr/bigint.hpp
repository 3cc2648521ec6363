#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucr {

// Arbitrary-precision unsigned integer, base 2^32, little-endian limbs.
// Just enough for exact factorials and hook products: multiply by a small
// factor, compare, subtract, shift, and one exact long division at the end.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v) {
        if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    bool is_zero() const { return limbs_.empty(); }

    void mul_small(std::uint32_t f) {
        if (f == 0) { limbs_.clear(); return; }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    // -1, 0, +1 as *this <=> other.
    int cmp(const BigUint& other) const {
        if (limbs_.size() != other.limbs_.size())
            return limbs_.size() < other.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != other.limbs_[i])
                return limbs_[i] < other.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    // Requires *this >= other.
    void sub(const BigUint& other) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow
                - (i < other.limbs_.size() ? other.limbs_[i] : 0);
            borrow = cur < 0;
            limbs_[i] = static_cast<std::uint32_t>(cur + (borrow << 32));
        }
        trim();
    }

    void shl1() {
        std::uint32_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }

    void shr1() {
        std::uint32_t carry = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint32_t next = limbs_[i] & 1;
            limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
            carry = next;
        }
        trim();
    }

    void add(const BigUint& other) {
        if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i]
                + (i < other.limbs_.size() ? other.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    // Exact quotient; throws if a remainder is left over.
    static BigUint div_exact(BigUint num, const BigUint& den) {
        if (den.is_zero()) throw std::invalid_argument("BigUint: division by zero");
        BigUint shifted = den;
        BigUint bit(1);
        while (shifted.cmp(num) < 0) { shifted.shl1(); bit.shl1(); }
        BigUint quot;
        while (!bit.is_zero()) {
            if (shifted.cmp(num) <= 0) {
                num.sub(shifted);
                quot.add(bit);
            }
            shifted.shr1();
            bit.shr1();
        }
        if (!num.is_zero()) throw std::logic_error("BigUint: division was not exact");
        return quot;
    }

    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUint: value exceeds 64-bit range");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + rem));
            while (!work.empty() && work.back() == 0) work.pop_back();
        }
        return {digits.rbegin(), digits.rend()};
    }

    static BigUint factorial(unsigned n) {
        BigUint r(1);
        for (unsigned k = 2; k <= n; ++k) r.mul_small(k);
        return r;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

} // namespace ucr
