#pragma once
// natural.hpp - Arbitrary-precision non-negative integer.
//
// Little-endian limbs in base 10^9, which keeps decimal I/O trivial and
// lets every intermediate product fit in 64 bits. The quantities handled
// by this library stay below a few dozen decimal digits, so schoolbook
// arithmetic is all that is needed.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gibon {

class Natural {
public:
    Natural() = default;

    Natural(std::uint64_t value) {
        while (value != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
            value /= kBase;
        }
    }

    Natural(int value) : Natural(static_cast<std::uint64_t>(value >= 0 ? value : 0)) {
        if (value < 0) {
            throw std::domain_error("Natural: value must be non-negative");
        }
    }

    static Natural from_string(std::string_view text) {
        if (text.empty()) {
            throw std::domain_error("Natural: empty decimal string");
        }
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::domain_error("Natural: invalid decimal string");
            }
        }
        Natural result;
        std::size_t end = text.size();
        while (end > 0) {
            std::size_t begin = end >= 9 ? end - 9 : 0;
            std::uint32_t limb = 0;
            for (std::size_t i = begin; i < end; ++i) {
                limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
            }
            result.limbs_.push_back(limb);
            end = begin;
        }
        result.normalize();
        return result;
    }

    bool is_zero() const noexcept { return limbs_.empty(); }

    bool fits_u64() const noexcept {
        if (limbs_.size() > 3) return false;
        return to_u128() <= static_cast<unsigned __int128>(UINT64_MAX);
    }

    // Narrowing accessor for callers that iterate (palette sizes, counts).
    std::uint64_t to_u64() const {
        if (!fits_u64()) {
            throw std::domain_error("Natural: value does not fit in 64 bits");
        }
        return static_cast<std::uint64_t>(to_u128());
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::string out = std::to_string(limbs_.back());
        char buf[10];
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
            out += buf;
        }
        return out;
    }

    Natural& operator+=(const Natural& rhs) {
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry;
            if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = static_cast<std::uint32_t>(cur / kBase);
        }
        if (carry != 0) limbs_.push_back(carry);
        return *this;
    }

    Natural& operator-=(const Natural& rhs) {
        if (*this < rhs) {
            throw std::domain_error("Natural: subtraction underflow");
        }
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
            if (i < rhs.limbs_.size()) cur -= rhs.limbs_[i];
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            limbs_[i] = static_cast<std::uint32_t>(cur);
        }
        normalize();
        return *this;
    }

    Natural& operator*=(const Natural& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Natural operator*(const Natural& a, const Natural& b) {
        if (a.is_zero() || b.is_zero()) return Natural{};
        Natural out;
        out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = out.limbs_[i + j] + carry +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            out.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        out.normalize();
        return out;
    }

    // In-place multiply by a machine-word scalar.
    Natural& mul_small(std::uint32_t m) {
        if (m == 0 || is_zero()) {
            limbs_.clear();
            return *this;
        }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        return *this;
    }

    // In-place divide by a machine-word scalar; returns the remainder.
    std::uint32_t div_small(std::uint32_t d) {
        if (d == 0) {
            throw std::domain_error("Natural: division by zero");
        }
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase + limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        normalize();
        return static_cast<std::uint32_t>(rem);
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

    friend bool operator==(const Natural& a, const Natural& b) noexcept {
        return a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
        if (a.limbs_.size() != b.limbs_.size()) {
            return a.limbs_.size() <=> b.limbs_.size();
        }
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        }
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
        return os << n.to_string();
    }

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;

    unsigned __int128 to_u128() const noexcept {
        unsigned __int128 v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            v = v * kBase + limbs_[i];
        }
        return v;
    }

    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

} // namespace gibon
