#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thompson/element.hpp"
#include "thompson/error.hpp"

using namespace thompson;
using thompson::testing::pairs_to_element;
using thompson::testing::W;

namespace {

const DyadicRational Q(const char* text) { return DyadicRational::parse(text); }

// Replaces pair i by its two children on both sides.
std::vector<BranchPair> refine(std::vector<BranchPair> pairs, std::size_t i) {
    const BranchPair p = pairs[i];
    pairs[i] = {p.domain.child(1), p.range.child(1)};
    pairs.insert(pairs.begin() + static_cast<std::ptrdiff_t>(i), {p.domain.child(0), p.range.child(0)});
    return pairs;
}

}  // namespace

TEST_CASE("construction from branch pairs") {
    CHECK(pairs_to_element({{"00", "0"}, {"01", "10"}, {"1", "11"}}) == Element::x0());
    const Element id = pairs_to_element({{"0", "0"}, {"1", "1"}});
    CHECK(id.is_identity());
    CHECK(id.pairs().front().domain.empty());
    CHECK(pairs_to_element({{"0", "00"}, {"10", "01"}, {"11", "1"}}) == invert(Element::x0()));

    CHECK_THROWS_AS(pairs_to_element({{"0", "0"}, {"11", "1"}}), Error);
    try {
        TreeDiagram(PrefixCode(std::vector<BinaryWord>{W("0"), W("1")}), PrefixCode());
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LengthMismatch);
    }
}

TEST_CASE("reduction") {
    const TreeDiagram identity3(PrefixCode(std::vector<BinaryWord>{W("00"), W("01"), W("1")}),
                                PrefixCode(std::vector<BinaryWord>{W("00"), W("01"), W("1")}));
    CHECK(reduce(identity3) == TreeDiagram());
    CHECK(reduce(Element::x0().diagram()) == Element::x0().diagram());

    // x0 with a caret hung below leaf 1 on both sides.
    const TreeDiagram padded(PrefixCode(std::vector<BinaryWord>{W("00"), W("01"), W("10"), W("11")}),
                             PrefixCode(std::vector<BinaryWord>{W("0"), W("10"), W("110"), W("111")}));
    CHECK(reduce(padded) == Element::x0().diagram());
}

TEST_CASE("canonical form survives random refinement") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Element f = thompson::testing::random_element(rng, 10);
        std::vector<BranchPair> pairs(f.pairs().begin(), f.pairs().end());
        for (int k = 0, n = 1 + static_cast<int>(rng() % 6); k < n; ++k) {
            pairs = refine(pairs, rng() % pairs.size());
        }
        CHECK(Element::from_branch_pairs(pairs) == f);
    }
}

TEST_CASE("evaluation matches the piecewise formulas") {
    CHECK(evaluate(Element::x0(), Q("1/4")) == Q("1/2"));
    CHECK(evaluate(Element::x1(), Q("5/8")) == Q("3/4"));
    CHECK(evaluate(Element::identity(), Q("3/16")) == Q("3/16"));
    CHECK(evaluate(Element::x0(), Q("0")) == Q("0"));
    CHECK(evaluate(Element::x0(), Q("1")) == Q("1"));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const DyadicRational t = thompson::testing::random_dyadic(rng, 12);
        CHECK(evaluate(Element::x0(), t) == thompson::testing::x0_formula(t));
        CHECK(evaluate(Element::x1(), t) == thompson::testing::x1_formula(t));
    }
}

TEST_CASE("composition") {
    const Element x0 = Element::x0(), x1 = Element::x1();
    CHECK((x0 * invert(x0)).is_identity());
    // x0(1/2) = 3/4, x0(3/4) = 7/8 from the formulas.
    CHECK(thompson::testing::x0_formula(thompson::testing::x0_formula(Q("1/2"))) == Q("7/8"));
    CHECK(evaluate(x0 * x0, Q("1/2")) == Q("7/8"));

    // Both defining relators.
    const Assignment gens{{"x0", x0}, {"x1", x1}};
    CHECK(eval_word(GroupWord::parse("[x0x1^-1, x0^-1 x1 x0]"), gens).is_identity());
    CHECK(eval_word(GroupWord::parse("[x0x1^-1, x0^-2 x1 x0^2]"), gens).is_identity());
    CHECK_FALSE(eval_word(GroupWord::parse("[x0, x1]"), gens).is_identity());

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Element f = thompson::testing::random_element(rng, 8);
        const Element g = thompson::testing::random_element(rng, 8);
        const Element fg = f * g;
        CHECK(abelianize(fg) == abelianize(f) + abelianize(g));
        for (int k = 0; k < 5; ++k) {
            const DyadicRational t = thompson::testing::random_dyadic(rng, 10);
            CHECK(evaluate(fg, t) == evaluate(g, evaluate(f, t)));
        }
        DyadicRational s = thompson::testing::random_dyadic(rng, 10);
        DyadicRational t = thompson::testing::random_dyadic(rng, 10);
        if (t < s) std::swap(s, t);
        if (s < t) CHECK(evaluate(f, s) < evaluate(f, t));
    }
}

TEST_CASE("inversion") {
    CHECK(invert(Element::identity()).is_identity());
    CHECK(invert(Element::x0()) == pairs_to_element({{"0", "00"}, {"10", "01"}, {"11", "1"}}));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const Element f = thompson::testing::random_element(rng, 10);
        CHECK(invert(invert(f)) == f);
        CHECK((invert(f) * f).is_identity());
    }
    CHECK(power(Element::x0(), -2) == invert(Element::x0() * Element::x0()));
    CHECK(power(Element::x1(), 0).is_identity());
}

TEST_CASE("slopes and abelianization") {
    CHECK(slope_right(Element::x0(), Q("0")) == 1);
    CHECK(slope_left(Element::x0(), Q("1")) == -1);
    CHECK(slope_right(Element::identity(), Q("3/8")) == 0);
    CHECK(slope_left(Element::x1(), Q("1/2")) == 0);
    CHECK(slope_right(Element::x1(), Q("1/2")) == 1);
    CHECK(slope_left(Element::x0(), Q("1/4")) == 1);
    CHECK(slope_right(Element::x0(), Q("1/4")) == 0);
    CHECK_THROWS_AS(slope_right(Element::x0(), Q("1")), Error);
    CHECK_THROWS_AS(slope_left(Element::x0(), Q("0")), Error);

    CHECK(abelianize(Element::x0()) == AbelianImage{1, -1});
    CHECK(abelianize(Element::x1()) == AbelianImage{0, -1});
    CHECK(abelianize(Element::identity()) == AbelianImage{0, 0});

    CHECK(in_derived(Element::identity()));
    CHECK_FALSE(in_derived(Element::x0()));
    const Assignment gens{{"x0", Element::x0()}, {"x1", Element::x1()}};
    CHECK(in_derived(eval_word(GroupWord::parse("[x0, x1]"), gens)));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const Element f = thompson::testing::random_element(rng, 10);
        const AbelianImage image = abelianize(f);
        CHECK(image.at_zero == slope_right(f, Q("0")));
        CHECK(image.at_one == slope_left(f, Q("1")));
    }
}

TEST_CASE("branch pairs") {
    const Element x0 = Element::x0();
    CHECK(has_branch_pair(x0, W("00"), W("0")));
    CHECK(has_branch_pair(x0, W("000"), W("00")));
    CHECK_FALSE(has_branch_pair(x0, W("1"), W("0")));
    CHECK(has_branch_pair(x0, W("1"), W("11")));
    CHECK_FALSE(has_branch_pair(x0, W("0"), W("0")));
    CHECK_FALSE(has_branch_pair(x0, W("e"), W("e")));
    CHECK(has_branch_pair(Element::identity(), W("0110"), W("0110")));

    // x1 is linear on [0] and on [11] but not on [1].
    CHECK(linear_image(Element::x1(), W("0")) == W("0"));
    CHECK(linear_image(Element::x1(), W("11")) == W("111"));
    CHECK_FALSE(linear_image(Element::x1(), W("1")).has_value());

    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        const Element f = thompson::testing::random_element(rng, 10);
        std::vector<BranchPair> pairs(f.pairs().begin(), f.pairs().end());
        pairs = refine(pairs, rng() % pairs.size());
        for (const auto& p : pairs) CHECK(has_branch_pair(f, p.domain, p.range));
        // Every reduced pair holds, and evaluation agrees with it.
        for (const auto& p : f.pairs()) {
            CHECK(evaluate(f, word_to_dyadic(p.domain)) == word_to_dyadic(p.range));
        }
    }
}

TEST_CASE("flip") {
    CHECK(flip(Element::x0()) == invert(Element::x0()));
    CHECK(flip(Element::identity()).is_identity());
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const Element f = thompson::testing::random_element(rng, 10);
        const Element g = thompson::testing::random_element(rng, 10);
        CHECK(flip(flip(f)) == f);
        CHECK(flip(f * g) == flip(f) * flip(g));
        const AbelianImage a = abelianize(f), b = abelianize(flip(f));
        CHECK(a.at_zero == b.at_one);
        CHECK(a.at_one == b.at_zero);
    }
}

TEST_CASE("group words") {
    const Assignment gens{{"x0", Element::x0()}, {"x1", Element::x1()}};
    CHECK(eval_word(GroupWord::parse("x0^1 x0^-1"), gens).is_identity());
    CHECK(evaluate(eval_word(GroupWord::parse("x0^2"), gens), Q("1/2")) == Q("7/8"));
    CHECK(GroupWord::parse("x0x1^-1").to_string() == "x0 x1^-1");
    CHECK(GroupWord::parse("[f, g]").to_string() == "f^-1 g^-1 f g");
    CHECK(GroupWord::parse("f^1 f^-1").length() == 2);
    CHECK(GroupWord::parse("").empty());
    CHECK(GroupWord::parse("g^-2").inverse().to_string() == "g^2");

    try {
        eval_word(GroupWord::parse("x2"), gens);
        FAIL("expected UnknownSymbol");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownSymbol);
    }
    CHECK_THROWS_AS(GroupWord::parse("x0^0"), Error);
    CHECK_THROWS_AS(GroupWord::parse("x0^"), Error);
    CHECK_THROWS_AS(GroupWord::parse("[x0, x1"), Error);
    CHECK_THROWS_AS(GroupWord::parse("x0 * x1"), Error);
}
