#pragma once

#include <array>
#include <cstdint>

#include "serredim/errors.hpp"

namespace serredim {

// Up to 8 user variables plus one internal auxiliary slot (radical tests).
constexpr int kMaxVars = 9;

/// Exponent vector with cached total degree. The ambient variable count is
/// carried by the ring and passed to the operations below.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    bool is_one() const { return deg == 0; }
};

inline bool mono_equal(const Monomial& a, const Monomial& b, int nvars) {
    if (a.deg != b.deg) return false;
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

inline Monomial mono_var(int i, uint16_t exp = 1) {
    Monomial m;
    m.e[i] = exp;
    m.deg = exp;
    return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) {
        uint32_t s = uint32_t(a.e[i]) + uint32_t(b.e[i]);
        if (s > 0xffffu) throw ResourceError("monomial exponent overflow (> 65535)");
        r.e[i] = uint16_t(s);
    }
    r.deg = a.deg + b.deg;
    return r;
}

// a | b ?
inline bool mono_divides(const Monomial& a, const Monomial& b, int nvars) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// a / b, assuming b | a
inline Monomial mono_div(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) r.e[i] = uint16_t(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    uint32_t d = 0;
    for (int i = 0; i < nvars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    uint32_t d = 0;
    for (int i = 0; i < nvars; ++i) {
        r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// bitmask of variables with positive exponent
inline uint32_t mono_support(const Monomial& a, int nvars) {
    uint32_t s = 0;
    for (int i = 0; i < nvars; ++i)
        if (a.e[i]) s |= 1u << i;
    return s;
}

}  // namespace serredim
