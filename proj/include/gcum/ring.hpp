#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace gcum::algebra {

/// Commutative ring with unit, integer embedding, and exact equality.
/// The default-constructed value is the additive zero; R(1) is the unit.
template <class R>
concept Ring = std::regular<R> && requires(R a, R b, long n) {
    R(n);
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
};

/// Ring that additionally supports exact division by nonzero elements.
template <class R>
concept FieldRing = Ring<R> && requires(R a, R b) {
    { a / b } -> std::convertible_to<R>;
};

template <Ring R>
bool is_zero(const R& x) {
    return x == R{};
}

inline bool is_zero(double x) { return x == 0.0; }

/// Exact division by a nonzero integer. Every coefficient ring used here
/// contains the rationals, so this never truncates.
inline double div_exact(double x, long n) { return x / static_cast<double>(n); }

template <Ring R>
R ring_pow(R base, unsigned long e) {
    R out(1);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

/// Rising factorial (x)_q = x (x+1) ... (x+q-1), with (x)_0 = 1.
template <Ring R>
R pochhammer(const R& x, long q) {
    if (q < 0) throw std::domain_error("pochhammer: negative length");
    R out(1);
    for (long j = 0; j < q; ++j) out = out * (x + R(j));
    return out;
}

inline long factorial_ll(int n) {
    if (n < 0 || n > 20) throw std::domain_error("factorial_ll: out of range");
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace gcum::algebra
