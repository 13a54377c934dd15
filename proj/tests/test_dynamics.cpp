#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/error.hpp"

using namespace thompson;
using thompson::testing::pairs_to_element;
using thompson::testing::W;

TEST_CASE("left fixed boundary") {
    CHECK(left_fixed_boundary(Element::x0()) == W("e"));
    CHECK(left_fixed_boundary(Element::x1()) == W("1"));
    const Element f = pairs_to_element({{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}});
    CHECK(left_fixed_boundary(f) == W("1"));
    // 0 -> 0 and 10 -> 10 fixed: boundary at 3/4.
    const Element h = pairs_to_element({{"0", "0"}, {"10", "10"}, {"1100", "110"}, {"1101", "1110"}, {"111", "1111"}});
    CHECK(left_fixed_boundary(h) == W("11"));
    CHECK_THROWS_AS(left_fixed_boundary(Element::identity()), Error);
}

TEST_CASE("zero tail pairs") {
    const auto t0 = zero_tail_pair(Element::x0(), W("e"));
    CHECK(t0.n == 2);
    CHECK(t0.m == 1);
    const auto t1 = zero_tail_pair(Element::x1(), W("1"));
    CHECK(t1.n == 2);
    CHECK(t1.m == 1);
    const auto t2 = zero_tail_pair(Element::x0() * Element::x0(), W("e"));
    CHECK(t2.n == 3);
    CHECK(t2.m == 1);
    CHECK_THROWS_AS(zero_tail_pair(invert(Element::x0()), W("e")), Error);
    CHECK_THROWS_AS(zero_tail_pair(Element::x0(), W("1")), Error);
}

TEST_CASE("uvw triples") {
    CHECK(find_uvw(Element::x0()) == UVWTriple{1, W("0001"), W("001"), W("01")});
    CHECK(find_uvw(Element::x1()) == UVWTriple{1, W("10001"), W("1001"), W("101")});
    CHECK(find_uvw(invert(Element::x0())) == UVWTriple{-1, W("0001"), W("001"), W("01")});
    CHECK_THROWS_AS(find_uvw(Element::identity()), Error);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Element f = thompson::testing::random_element(rng, 12);
        if (f.is_identity()) continue;
        const UVWTriple t = find_uvw(f);
        const Element g = t.sign > 0 ? f : invert(f);
        CHECK(interval_less(t.u, t.v));
        CHECK(interval_less(t.v, t.w));
        CHECK(has_both_digits(t.u));
        CHECK(has_both_digits(t.v));
        CHECK(has_both_digits(t.w));
        CHECK(has_branch_pair(g, t.u, t.v));
        CHECK(has_branch_pair(g, t.v, t.w));
    }
}

TEST_CASE("one tail pairs") {
    const auto a = one_tail_pair(invert(Element::x0()));
    CHECK(a.sign == 1);
    CHECK(a.m == 2);
    CHECK(a.ell == 1);
    const auto b = one_tail_pair(Element::x0());
    CHECK(b.sign == -1);
    CHECK(b.m == 2);
    CHECK(b.ell == 1);

    const Element sq = Element::x1() * Element::x1();
    const auto c = one_tail_pair(sq);
    const Element g = c.sign > 0 ? sq : invert(sq);
    CHECK(c.m > c.ell);
    CHECK(has_branch_pair(g, BinaryWord::repeat(1, c.m), BinaryWord::repeat(1, c.m - c.ell)));
    CHECK_THROWS_AS(one_tail_pair(Element::identity()), Error);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Element f = thompson::testing::random_element(rng, 12);
        if (abelianize(f).at_one == 0) continue;
        const auto t = one_tail_pair(f);
        const Element h = t.sign > 0 ? f : invert(f);
        CHECK(t.ell >= 1);
        CHECK(has_branch_pair(h, BinaryWord::repeat(1, t.m), BinaryWord::repeat(1, t.m - t.ell)));
    }
}
