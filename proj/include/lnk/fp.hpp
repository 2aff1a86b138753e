#pragma once

#include <cstdint>
#include <stdexcept>

namespace lnk {

/// Arithmetic in the prime field F_p. Elements are least nonnegative
/// residues stored in int64_t; p is carried by the ring, not the element.
namespace fp {

inline int64_t normalize(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

inline int64_t add(int64_t a, int64_t b, int64_t p) { return (a + b) % p; }
inline int64_t sub(int64_t a, int64_t b, int64_t p) { return normalize(a - b, p); }
inline int64_t mul(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }
inline int64_t neg(int64_t a, int64_t p) { return a == 0 ? 0 : p - a; }

inline int64_t pow(int64_t a, int64_t e, int64_t p) {
    int64_t r = 1;
    a = normalize(a, p);
    while (e > 0) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline int64_t inv(int64_t a, int64_t p) {
    a = normalize(a, p);
    if (a == 0) throw std::domain_error("fp::inv: division by zero");
    return pow(a, p - 2, p);
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace fp
} // namespace lnk
