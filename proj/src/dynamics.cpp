#include "thompson/dynamics.hpp"

#include "thompson/error.hpp"

namespace thompson {

BinaryWord left_fixed_boundary(const Element& f) {
    if (f.is_identity()) throw Error(ErrorKind::IdentityInput, "identity has no fixed boundary");
    const auto pairs = f.pairs();
    std::size_t k = 0;
    while (k < pairs.size() && pairs[k].domain == pairs[k].range) ++k;
    if (k == 0) return {};
    return DyadicInterval{pairs[k - 1].domain}.right().to_word();
}

ZeroTail zero_tail_pair(const Element& f, const BinaryWord& s) {
    const DyadicRational alpha = word_to_dyadic(s);
    if (alpha.is_one() || evaluate(f, alpha) != alpha || slope_right(f, alpha) <= 0) {
        throw Error(ErrorKind::PreconditionViolated,
                    "zero tail needs a fixed point with slope above 1 on its right");
    }
    const BinaryWord stem = s.strip_trailing(0);
    const auto pairs = f.pairs();
    std::size_t i = 0;
    while (i + 1 < pairs.size() && compare_points(pairs[i + 1].domain, stem) <= 0) ++i;
    const BranchPair& p = pairs[i];

    const auto du = static_cast<std::int64_t>(p.domain.size());
    const auto dv = static_cast<std::int64_t>(p.range.size());
    const auto ls = static_cast<std::int64_t>(stem.size());
    const std::int64_t n = std::max({du - ls, du - dv, std::int64_t{1}});
    const ZeroTail tail{n, n - (du - dv)};

    const BinaryWord from = stem + BinaryWord::repeat(0, static_cast<std::size_t>(tail.n));
    const BinaryWord to = stem + BinaryWord::repeat(0, static_cast<std::size_t>(tail.m));
    if (!has_branch_pair(f, from, to)) {
        throw Error(ErrorKind::PreconditionViolated, "no zero tail pair at ." + s.to_string());
    }
    return tail;
}

UVWTriple find_uvw(const Element& f) {
    const BinaryWord s = left_fixed_boundary(f);
    const DyadicRational alpha = word_to_dyadic(s);
    const int sign = slope_right(f, alpha) > 0 ? 1 : -1;
    const Element g = sign > 0 ? f : invert(f);
    const auto [n, m] = zero_tail_pair(g, s);

    const BinaryWord stem = s.strip_trailing(0);
    auto word = [&](std::int64_t zeros) {
        return (stem + BinaryWord::repeat(0, static_cast<std::size_t>(zeros))).child(1);
    };
    UVWTriple t{sign, word(2 * n - m), word(n), word(m)};

    if (!has_both_digits(t.u) || !has_both_digits(t.v) || !has_both_digits(t.w) ||
        !has_branch_pair(g, t.u, t.v) || !has_branch_pair(g, t.v, t.w)) {
        throw Error(ErrorKind::InvalidTriple, "triple self-check failed");
    }
    return t;
}

OneTail one_tail_pair(const Element& f) {
    const std::int64_t b = abelianize(f).at_one;
    if (b == 0) throw Error(ErrorKind::PreconditionViolated, "slope 1 at 1-");
    const int sign = b > 0 ? 1 : -1;
    const Element g = sign > 0 ? f : invert(f);
    const BranchPair& last = g.pairs().back();
    OneTail tail{sign, static_cast<std::int64_t>(last.domain.size()),
                 static_cast<std::int64_t>(last.domain.size() - last.range.size())};
    if (!has_branch_pair(g, last.domain, last.range) || tail.ell < 1 || tail.m <= tail.ell) {
        throw Error(ErrorKind::PreconditionViolated, "no one tail pair");
    }
    return tail;
}

}  // namespace thompson
