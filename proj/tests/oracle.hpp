#pragma once

// Test-only brute-force oracles. Expected values are recomputed here by
// direct enumeration with a separate little fraction arithmetic (unreduced
// int64 with overflow checks), so nothing on this path shares code with the
// library's Rational / Experiment implementation.

#include "sblab/rational.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

inline long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("oracle: multiplication overflow");
    return out;
}

inline long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("oracle: addition overflow");
    return out;
}

// Fraction over int64, den > 0, kept reduced so chained sums do not
// overflow.
struct Frac {
    long long num = 0;
    long long den = 1;
};

inline Frac reduced(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    return g > 1 ? Frac{num / g, den / g} : Frac{num, den};
}

inline Frac frac(long long num, long long den) {
    if (den <= 0)
        throw std::invalid_argument("oracle: denominator must be positive");
    return reduced(num, den);
}

inline Frac add(Frac a, Frac b) {
    return reduced(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
}

inline Frac sub(Frac a, Frac b) {
    return add(a, Frac{-b.num, b.den});
}

inline Frac mul(Frac a, Frac b) {
    return reduced(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

inline Frac div(Frac a, Frac b) {
    if (b.num == 0)
        throw std::domain_error("oracle: division by zero");
    return reduced(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

inline bool is_zero(Frac a) {
    return a.num == 0;
}

inline bool eq(Frac a, Frac b) {
    return checked_mul(a.num, b.den) == checked_mul(b.num, a.den);
}

inline bool eq(Frac a, const sblab::Rational& r) {
    // Cross-multiplied in big-integer space; r.den() > 0 and a.den > 0.
    return sblab::BigInt(a.num) * r.den() == r.num() * sblab::BigInt(a.den);
}

struct SpacePoint {
    std::string label;
    bool heads = false;
    int day = 0; // 0 when the space has no day structure
    Frac prob;
};

inline std::vector<SpacePoint> enumerate_ere(Frac p_heads) {
    return {{"H", true, 0, p_heads}, {"T", false, 0, sub(frac(1, 1), p_heads)}};
}

inline std::vector<SpacePoint> enumerate_sbre(Frac p_heads, int n) {
    std::vector<SpacePoint> space;
    space.push_back({"H1", true, 1, p_heads});
    const Frac share = div(sub(frac(1, 1), p_heads), frac(n, 1));
    for (int k = 1; k <= n; ++k)
        space.push_back({"T" + std::to_string(k), false, k, share});
    return space;
}

inline Frac prob_of(const std::vector<SpacePoint>& space, const std::set<std::string>& members) {
    Frac total = frac(0, 1);
    for (const auto& point : space)
        if (members.count(point.label) > 0)
            total = add(total, point.prob);
    return total;
}

inline Frac conditional_of(const std::vector<SpacePoint>& space,
                           const std::set<std::string>& a, const std::set<std::string>& given) {
    std::set<std::string> both;
    for (const auto& label : a)
        if (given.count(label) > 0)
            both.insert(label);
    return div(prob_of(space, both), prob_of(space, given));
}

// Per-trial betting expectation: enumerate the coin branches and settle one
// bet per scheduled awakening (Heads wakes once, Tails wakes n times).
inline Frac halfer_ev_by_enumeration(Frac p_heads, int n, Frac cost, Frac payoff) {
    Frac heads_gain = sub(payoff, cost);
    Frac tails_gain = frac(0, 1);
    for (int k = 1; k <= n; ++k)
        tails_gain = sub(tails_gain, cost);
    return add(mul(p_heads, heads_gain), mul(sub(frac(1, 1), p_heads), tails_gain));
}

inline Frac expected_awakenings_by_enumeration(Frac p_heads, int n) {
    return add(mul(p_heads, frac(1, 1)), mul(sub(frac(1, 1), p_heads), frac(n, 1)));
}

} // namespace oracle
