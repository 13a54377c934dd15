#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thompson/certify.hpp"
#include "thompson/error.hpp"

using namespace thompson;
using thompson::testing::W;

namespace {

std::vector<BinaryWord> all_words(std::int64_t max_len) {
    std::vector<BinaryWord> out{BinaryWord{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (static_cast<std::int64_t>(out[i].size()) < max_len) {
            out.push_back(out[i].child(0));
            out.push_back(out[i].child(1));
        }
    }
    return out;
}

// Fixpoint of the three rules over an explicit boolean matrix.
std::set<Relation> naive_closure(const std::vector<Relation>& seeds, std::int64_t max_len) {
    const auto words = all_words(max_len);
    std::map<BinaryWord, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    const std::size_t n = words.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = 1;
    for (const auto& r : seeds) {
        rel[index.at(r.lhs)][index.at(r.rhs)] = 1;
        rel[index.at(r.rhs)][index.at(r.lhs)] = 1;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (rel[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (rel[k][j] && !rel[i][j]) rel[i][j] = 1, changed = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!rel[i][j]) continue;
                for (int b = 0; b < 2; ++b) {
                    const auto a = index.find(words[i].child(b)), c = index.find(words[j].child(b));
                    if (a != index.end() && c != index.end() && !rel[a->second][c->second]) {
                        rel[a->second][c->second] = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    std::set<Relation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel[i][j]) out.insert(Relation::make(words[i], words[j]));
    return out;
}

Certificate bare(const Element& f, const Element& g) {
    Certificate c;
    c.f = f;
    c.g = g;
    return c;
}

}  // namespace

TEST_CASE("relations are stored smaller word first") {
    const Relation r = Relation::make(W("1"), W("01"));
    CHECK(r.lhs == W("01"));
    CHECK(r == Relation::make(W("01"), W("1")));
}

TEST_CASE("saturation examples") {
    const Relation uv = Relation::make(W("01"), W("10"));
    {
        Closure c = saturate(std::vector{uv}, 4);
        CHECK(c.contains(W("010"), W("100")));
        CHECK(c.contains(W("0111"), W("1011")));
        CHECK_FALSE(c.contains(W("01"), W("011")));
        CHECK(c.contains(W("110"), W("110")));
    }
    {
        Closure c = saturate(std::vector{uv, Relation::make(W("10"), W("11"))}, 3);
        CHECK(c.contains(W("01"), W("11")));
        CHECK(c.contains(W("010"), W("110")));
    }
    {
        const BinaryWord w = W("01");
        Closure c = saturate(std::vector{Relation::make(w, W("010"))}, 5);
        CHECK(c.contains(w, W("0100")));
        CHECK(c.contains(W("0100"), W("01000")));
        CHECK_FALSE(c.contains(w, W("011")));
    }
    {
        // Long words beyond the bound stay unrelated.
        Closure c = saturate(std::vector{uv}, 3);
        CHECK_FALSE(c.contains(W("0100"), W("1000")));
    }
}

TEST_CASE("saturation agrees with the naive fixpoint") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t L = 2 + static_cast<std::int64_t>(rng() % 3);
        const auto words = all_words(L);
        std::vector<Relation> seeds;
        for (int k = 0, n = 1 + static_cast<int>(rng() % 4); k < n; ++k) {
            seeds.push_back(Relation::make(words[rng() % words.size()], words[rng() % words.size()]));
        }
        Closure c = saturate(seeds, L);
        CHECK(c.enumerate(L) == naive_closure(seeds, L));

        // Seed order does not matter; saturating the output changes nothing.
        std::vector<Relation> reversed(seeds.rbegin(), seeds.rend());
        Closure d = saturate(reversed, L);
        CHECK(d.enumerate(L) == c.enumerate(L));
        const auto once = c.enumerate(L);
        std::vector<Relation> again(once.begin(), once.end());
        CHECK(saturate(again, L).enumerate(L) == once);
    }
}

TEST_CASE("witness verification") {
    const Certificate c = bare(Element::x0(), Element::identity());
    CHECK(verify_witness(c, {GroupWord::parse("f"), W("00"), W("0")}));
    CHECK(verify_witness(c, {GroupWord::parse("f^1 f^-1"), W("0110"), W("0110")}));
    CHECK_FALSE(verify_witness(c, {GroupWord::parse("f"), W("1"), W("0")}));
    CHECK_THROWS_AS(verify_witness(c, {GroupWord::parse("h"), W("1"), W("0")}), Error);
}

TEST_CASE("slope check") {
    Certificate c = bare(Element::x1(), Element::identity());
    c.slope = {GroupWord::parse("f"), W("1")};
    CHECK(check_slope(c));
    c.slope = {GroupWord::parse("g"), W("1")};
    CHECK_FALSE(check_slope(c));
    c.slope = {GroupWord::parse("f"), W("01")};
    CHECK_FALSE(check_slope(c));
}

TEST_CASE("schema checks") {
    // H = <x0>: 0^k ~ 0^(k-1) for k >= 2 via 00 -> 0.
    Certificate c = bare(Element::x0(), Element::identity());
    c.w = W("01");
    Closure closure = saturate(std::vector{Relation::make(W("001"), W("01"))}, 8);
    ShiftSchema s{0, W("0"), W("1"), {GroupWord::parse("f"), W("00"), W("0")}, 2};
    std::string why;
    CHECK(check_schema(c, s, closure, &why));

    ShiftSchema flat = s;
    flat.witness.to = flat.witness.from;
    CHECK_FALSE(check_schema(c, flat, closure, &why));

    ShiftSchema short_base = s;
    short_base.base_count = 0;
    CHECK_FALSE(check_schema(c, short_base, closure, &why));

    Closure empty = saturate(std::vector<Relation>{}, 8);
    CHECK_FALSE(check_schema(c, s, empty, &why));

    ShiftSchema wrong_stem = s;
    wrong_stem.witness = {GroupWord::parse("f"), W("000"), W("00")};
    wrong_stem.stem = W("1");
    CHECK_FALSE(check_schema(c, wrong_stem, closure, &why));
}

TEST_CASE("brute force relations") {
    const auto rels = brute_force_relations(Element::x0(), Element::identity(), 1, 3);
    CHECK(rels.count(Relation::make(W("00"), W("0"))));
    CHECK(rels.count(Relation::make(W("000"), W("00"))));
    CHECK_FALSE(rels.count(Relation::make(W("1"), W("0"))));

    const auto trivial = brute_force_relations(Element::identity(), Element::identity(), 2, 3);
    CHECK(std::all_of(trivial.begin(), trivial.end(), [](const Relation& r) { return r.lhs == r.rhs; }));
    CHECK(trivial.size() == 15);
}

TEST_CASE("relations of F on words with both digits") {
    const auto rels = brute_force_relations(Element::x0(), Element::x1(), 6, 3);
    std::vector<BinaryWord> mixed;
    for (const auto& u : all_words(3)) {
        if (has_both_digits(u)) mixed.push_back(u);
    }
    CHECK(mixed.size() == 8);
    for (const auto& u : mixed) {
        for (const auto& v : mixed) CHECK(rels.count(Relation::make(u, v)));
    }
    // Words 0^k are only related among themselves.
    CHECK_FALSE(rels.count(Relation::make(W("0"), W("01"))));
}
