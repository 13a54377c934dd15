#pragma once

// Branch-level readings of an element near its fixed boundary and near 1.

#include <cstdint>

#include "thompson/element.hpp"

namespace thompson {

// f^sign has the branch pairs u -> v and v -> w, with [u] < [v] < [w] and
// all three words containing both digits.
struct UVWTriple {
    int sign = 1;
    BinaryWord u;
    BinaryWord v;
    BinaryWord w;

    friend bool operator==(const UVWTriple&, const UVWTriple&) = default;
};

struct ZeroTail {
    std::int64_t n = 0;
    std::int64_t m = 0;
};

struct OneTail {
    int sign = 1;
    std::int64_t m = 0;
    std::int64_t ell = 0;
};

// Word s with .s the sup of the points t such that f is the identity on
// [0,t]. Empty when f moves points arbitrarily close to 0.
BinaryWord left_fixed_boundary(const Element& f);

// (n, m) with f having the pair s'0^n -> s'0^m, s' = s without trailing
// zeros. Needs f(.s) = .s and slope > 1 just right of .s.
ZeroTail zero_tail_pair(const Element& f, const BinaryWord& s);

UVWTriple find_uvw(const Element& f);

// f^sign has the pair 1^m -> 1^(m-ell), m > ell >= 1.
OneTail one_tail_pair(const Element& f);

}  // namespace thompson
