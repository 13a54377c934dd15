#include "thompson/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <tuple>

#include "thompson/error.hpp"

namespace thompson {

namespace {

// (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
    }
    if (r0 < 0) return {-r0, -x0, -y0};
    return {r0, x0, y0};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t determinant(const LatticeBasis& b) { return b.v1.x * b.v2.y - b.v1.y * b.v2.x; }

Index index_of(const LatticeBasis& b) {
    const std::int64_t det = determinant(b);
    if (det == 0) return {};
    return {std::llabs(det)};
}

Companion companion_rectangular(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw Error(ErrorKind::ZeroInput, "(0,0) has no companion");
    if (a == 0) return {{1, 0}, {1, std::llabs(b)}};
    if (b == 0) return {{0, 1}, {std::llabs(a), 1}};

    const std::int64_t g = std::gcd(a, b);
    const std::int64_t a1 = a / g, b1 = b / g;

    // q collects the full prime powers of g whose prime divides a'.
    std::int64_t q = 1, rest = g;
    for (std::int64_t prime = 2; prime * prime <= rest; ++prime) {
        std::int64_t power = 1;
        while (rest % prime == 0) {
            rest /= prime;
            power *= prime;
        }
        if (power > 1 && a1 % prime == 0) q *= power;
    }
    if (rest > 1 && a1 % rest == 0) q *= rest;
    const std::int64_t p = g / q;

    // m (q a') - n (p b') = 1 with m in [1, |p b'|].
    const std::int64_t A = q * a1, B = p * b1;
    const std::int64_t mod = std::llabs(B);
    std::int64_t m = 1;
    if (mod > 1) {
        const auto [h, x, y] = extended_gcd(floor_mod(A, mod), mod);
        (void)y;
        if (h != 1) throw Error(ErrorKind::NotUnimodular, "internal: q a' and p b' not coprime");
        m = floor_mod(x, mod);
        if (m == 0) m = mod;
    }
    const std::int64_t n = (m * A - 1) / B;
    return {{n * p, m * q}, {p, q}};
}

Vec2 complete_basis(std::int64_t a, std::int64_t b) {
    const auto [g, x, y] = extended_gcd(a, b);
    if (g != 1) throw Error(ErrorKind::NotUnimodular, "gcd(a,b) must be 1");
    return {-y, x};
}

bool lattice_contains(const LatticeBasis& b, Vec2 v) {
    const std::int64_t det = determinant(b);
    if (det != 0) {
        const std::int64_t sx = v.x * b.v2.y - v.y * b.v2.x;
        const std::int64_t sy = b.v1.x * v.y - b.v1.y * v.x;
        return sx % det == 0 && sy % det == 0;
    }
    const Vec2 r = (b.v1 == Vec2{}) ? b.v2 : b.v1;
    if (r == Vec2{}) return v == Vec2{};
    const std::int64_t k = std::gcd(r.x, r.y);
    const Vec2 e{r.x / k, r.y / k};
    if (v.x * e.y - v.y * e.x != 0) return false;
    auto coeff = [&](Vec2 u) { return e.x != 0 ? u.x / e.x : u.y / e.y; };
    const std::int64_t step = std::gcd(coeff(b.v1), coeff(b.v2));
    return coeff(v) % step == 0;
}

std::optional<LatticeBasis> hermite_form(const LatticeBasis& b) {
    if (determinant(b) == 0) return std::nullopt;
    auto [h11, s, t] = extended_gcd(b.v1.x, b.v2.x);
    Vec2 top{h11, s * b.v1.y + t * b.v2.y};
    const std::int64_t h22 = std::llabs((b.v2.x / h11) * b.v1.y - (b.v1.x / h11) * b.v2.y);
    top.y = floor_mod(top.y, h22);
    return LatticeBasis{top, {0, h22}};
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
    return lattice_contains(a, b.v1) && lattice_contains(a, b.v2) && lattice_contains(b, a.v1) &&
           lattice_contains(b, a.v2);
}

}  // namespace thompson
