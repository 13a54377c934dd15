#pragma once

// Sublattices of Z^2 spanned by two vectors.

#include <cstdint>
#include <optional>
#include <string>

namespace thompson {

struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct LatticeBasis {
    Vec2 v1;
    Vec2 v2;

    friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

// Index in Z^2; empty when infinite.
struct Index {
    std::optional<std::int64_t> value;

    bool infinite() const { return !value.has_value(); }
    std::string to_string() const { return value ? std::to_string(*value) : "INFINITE"; }
    friend bool operator==(const Index&, const Index&) = default;
};

// The lattice pZ x qZ.
struct RectangularForm {
    std::int64_t p = 1;
    std::int64_t q = 1;

    friend bool operator==(const RectangularForm&, const RectangularForm&) = default;
};

struct Companion {
    Vec2 cd;
    RectangularForm form;
};

std::int64_t determinant(const LatticeBasis& b);
Index index_of(const LatticeBasis& b);

// (c,d) with <(a,b),(c,d)> = pZ x qZ and pq = gcd(a,b). The Bezout
// coefficient m is taken in [1, |p b'|]. Throws ZeroInput.
Companion companion_rectangular(std::int64_t a, std::int64_t b);

// (c,d) with ad - bc = 1. Throws NotUnimodular unless gcd(a,b) = 1.
Vec2 complete_basis(std::int64_t a, std::int64_t b);

bool lattice_contains(const LatticeBasis& b, Vec2 v);

// Rows (h11,h12), (0,h22) with h11, h22 > 0 and 0 <= h12 < h22.
// Empty for degenerate bases.
std::optional<LatticeBasis> hermite_form(const LatticeBasis& b);

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

}  // namespace thompson
