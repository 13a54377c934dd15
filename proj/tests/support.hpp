#pragma once

// Shared generators and independent oracles for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/words.hpp"

namespace thompson::testing {

inline BinaryWord W(const char* bits) { return BinaryWord::parse(bits); }

inline Element pairs_to_element(std::initializer_list<std::pair<const char*, const char*>> pairs) {
    std::vector<BranchPair> out;
    for (auto [u, v] : pairs) out.push_back({W(u), W(v)});
    return Element::from_branch_pairs(out);
}

// Random full tree with `splits` carets.
inline PrefixCode random_code(std::mt19937_64& rng, int splits) {
    std::vector<BinaryWord> leaves{BinaryWord{}};
    for (int i = 0; i < splits; ++i) {
        const std::size_t k = rng() % leaves.size();
        BinaryWord leaf = leaves[k];
        leaves[k] = leaf.child(1);
        leaves.insert(leaves.begin() + static_cast<std::ptrdiff_t>(k), leaf.child(0));
    }
    return PrefixCode(std::move(leaves));
}

// Random product of x0^±1, x1^±1 of length 1..max_len.
inline Element random_element(std::mt19937_64& rng, int max_len) {
    const Element gens[4] = {Element::x0(), invert(Element::x0()), Element::x1(), invert(Element::x1())};
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
    Element e;
    for (int i = 0; i < len; ++i) e = e * gens[rng() % 4];
    return e;
}

inline DyadicRational random_dyadic(std::mt19937_64& rng, int max_exponent) {
    const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_exponent + 1));
    const std::uint64_t den = std::uint64_t{1} << n;
    return DyadicRational(BigInt(rng() % (den + 1)), static_cast<std::uint64_t>(n));
}

// Exact rational k / 2^n with arbitrary sign used by the formula oracles.
struct Frac {
    BigInt num;
    std::uint64_t exp;
};

inline Frac to_frac(const DyadicRational& t) { return {t.numerator(), t.exponent()}; }

inline DyadicRational from_frac(Frac f) {
    while (f.exp > 0 && (f.num & 1) == 0) {
        f.num >>= 1;
        --f.exp;
    }
    return DyadicRational(f.num, f.exp);
}

// Compare t with p/2^q.
inline int cmp(const Frac& t, std::int64_t p, std::uint64_t q) {
    const std::uint64_t e = std::max(t.exp, q);
    const BigInt a = t.num << (e - t.exp);
    const BigInt b = BigInt(p) << (e - q);
    return a < b ? -1 : (a > b ? 1 : 0);
}

// a*t + b with a = 2^s (s may be negative) and b = bn/2^be.
inline Frac affine(const Frac& t, int s, std::int64_t bn, std::uint64_t be) {
    Frac scaled = t;
    if (s >= 0) scaled.num <<= s;
    else scaled.exp += static_cast<std::uint64_t>(-s);
    const std::uint64_t e = std::max(scaled.exp, be);
    return {(scaled.num << (e - scaled.exp)) + (BigInt(bn) << (e - be)), e};
}

// The piecewise-linear formulas for the two generators.
inline DyadicRational x0_formula(const DyadicRational& t) {
    const Frac f = to_frac(t);
    if (cmp(f, 1, 2) <= 0) return from_frac(affine(f, 1, 0, 0));    // 2t on [0,1/4]
    if (cmp(f, 1, 1) <= 0) return from_frac(affine(f, 0, 1, 2));    // t + 1/4 on [1/4,1/2]
    return from_frac(affine(f, -1, 1, 1));                          // t/2 + 1/2
}

inline DyadicRational x1_formula(const DyadicRational& t) {
    const Frac f = to_frac(t);
    if (cmp(f, 1, 1) <= 0) return t;                                // t on [0,1/2]
    if (cmp(f, 5, 3) <= 0) return from_frac(affine(f, 1, -1, 1));   // 2t - 1/2 on [1/2,5/8]
    if (cmp(f, 3, 2) <= 0) return from_frac(affine(f, 0, 1, 3));    // t + 1/8 on [5/8,3/4]
    return from_frac(affine(f, -1, 1, 1));                          // t/2 + 1/2
}

}  // namespace thompson::testing
