#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "dunkl/error.hpp"

namespace dunkl {

/// Exponent vector over at most kMaxVars variables, packed one byte per
/// variable into two machine words.  The top byte of `hi` holds the total
/// degree, so comparing (hi, lo) as unsigned integers is exactly the graded
/// lexicographic order with variable 0 the largest.
class Monomial {
public:
    static constexpr int kMaxVars = 15;
    static constexpr int kMaxDegree = 255;

    constexpr Monomial() = default;

    static Monomial var(int index, int exponent = 1) {
        Monomial m;
        m.set(index, exponent);
        return m;
    }

    int degree() const noexcept { return static_cast<int>(hi_ >> 56); }

    int operator[](int index) const noexcept {
        if (index < 7) return static_cast<int>((hi_ >> (8 * (6 - index))) & 0xff);
        return static_cast<int>((lo_ >> (8 * (14 - index))) & 0xff);
    }

    void set(int index, int exponent) {
        if (index < 0 || index >= kMaxVars) throw Error(ErrorKind::Overflow, "variable index out of range");
        if (exponent < 0 || exponent > kMaxDegree) throw Error(ErrorKind::Overflow, "exponent out of range");
        const int old = (*this)[index];
        const int deg = degree() - old + exponent;
        if (deg > kMaxDegree) throw Error(ErrorKind::Overflow, "monomial degree exceeds 255");
        if (index < 7) {
            const int shift = 8 * (6 - index);
            hi_ = (hi_ & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t(exponent) << shift);
        } else {
            const int shift = 8 * (14 - index);
            lo_ = (lo_ & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t(exponent) << shift);
        }
        hi_ = (hi_ & ~(std::uint64_t{0xff} << 56)) | (std::uint64_t(deg) << 56);
    }

    bool is_one() const noexcept { return hi_ == 0 && lo_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.degree() + b.degree() > kMaxDegree) throw Error(ErrorKind::Overflow, "monomial degree exceeds 255");
        Monomial m;
        m.hi_ = a.hi_ + b.hi_;
        m.lo_ = a.lo_ + b.lo_;
        return m;
    }

    /// True iff every exponent of `d` is at most the matching exponent here.
    bool divisible_by(const Monomial& d) const noexcept {
        // Per-byte borrow detection: subtracting bytewise must never underflow.
        return bytes_ge(hi_ & kVarMaskHi, d.hi_ & kVarMaskHi) && bytes_ge(lo_, d.lo_);
    }

    /// Quotient; requires divisible_by(d).
    Monomial operator/(const Monomial& d) const noexcept {
        Monomial m;
        m.hi_ = hi_ - d.hi_;
        m.lo_ = lo_ - d.lo_;
        return m;
    }

    /// Componentwise minimum.
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) {
            const int e = std::min(a[i], b[i]);
            if (e) m.set(i, e);
        }
        return m;
    }

    /// Highest variable index with a nonzero exponent, or -1.
    int last_var() const noexcept {
        for (int i = kMaxVars - 1; i >= 0; --i)
            if ((*this)[i]) return i;
        return -1;
    }

    /// True iff only variables with index < bound appear.
    bool only_below(int bound) const noexcept { return last_var() < bound; }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.hi_ == b.hi_ && a.lo_ == b.lo_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) noexcept {
        return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
    }
    friend bool operator>(const Monomial& a, const Monomial& b) noexcept { return b < a; }

    std::size_t hash() const noexcept {
        std::uint64_t h = hi_ * 0x9E3779B97F4A7C15ULL ^ (lo_ + 0x632BE59BD9B4E019ULL + (hi_ << 6) + (hi_ >> 2));
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }

private:
    static constexpr std::uint64_t kVarMaskHi = 0x00ffffffffffffffULL;

    static bool bytes_ge(std::uint64_t a, std::uint64_t b) noexcept {
        // Sets bit 8 of each lane before subtracting; a lane borrowed iff that bit cleared.
        constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
        constexpr std::uint64_t kLow = 0x7f7f7f7f7f7f7f7fULL;
        // Split each byte into high bit and low seven bits to avoid cross-lane borrows.
        const std::uint64_t diff_low = ((a & kLow) | kHigh) - (b & kLow);
        // For each lane: a >= b iff (a_hi > b_hi) or (a_hi == b_hi and low part did not borrow).
        const std::uint64_t ah = a & kHigh, bh = b & kHigh;
        const std::uint64_t no_borrow = diff_low & kHigh;
        // lane ok iff (ah & ~bh) | (~(ah ^ bh) & no_borrow)
        const std::uint64_t ok = (ah & ~bh) | (~(ah ^ bh) & no_borrow);
        return (ok & kHigh) == kHigh;
    }

    std::uint64_t hi_ = 0;
    std::uint64_t lo_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace dunkl
