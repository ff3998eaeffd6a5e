#pragma once

// Arithmetic modulo a fixed 62-bit prime p = 1 (mod 4), used as a cheap
// filter before exact polynomial division.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl::modp {

inline constexpr std::uint64_t kP = 4611686018427387817ULL;
inline constexpr std::uint64_t kSqrtMinusOne = 120863620846201794ULL;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s >= kP ? s - kP : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : kP - a; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kP - 2); }

/// Residue of a rational; empty if p divides the denominator.
inline std::optional<std::uint64_t> residue(const Rational& q) {
    const std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kP);
    if (d == 0) return std::nullopt;
    const std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kP);
    return d == 1 ? n : mul(n, inv(d));
}

/// Deterministic splitmix64 stream.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t residue() { return next() % kP; }

private:
    std::uint64_t state_;
};

/// Value of p at a point given as residues, one per variable index.
std::optional<std::uint64_t> evaluate(const Poly& p, std::span<const std::uint64_t> point);

}  // namespace dunkl::modp
