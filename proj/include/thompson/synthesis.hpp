#pragma once

// Partners g for a non-trivial f with prescribed abelian image, built by tree
// surgery, each returned together with a certificate that <f,g> contains
// [F,F].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thompson/certify.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/element.hpp"
#include "thompson/lattice.hpp"

namespace thompson {

// A branch pair of the constructed diagram, tagged with its block name
// ("A", "B", "C" or "C'").
struct BlockPair {
    std::string block;
    BinaryWord from;
    BinaryWord to;
};

struct Construction {
    int part = 0;
    bool inverted = false;  // g is the inverse of the diagram built
    bool flipped = false;   // part 3: everything mirrored from part 2
    UVWTriple uvw;
    PrefixCode tree;
    std::size_t k = 0;      // 1-based position of w0 in the tree
    std::vector<BlockPair> blocks;
    std::size_t carets_plus = 0;
    std::size_t carets_minus = 0;
};

struct SynthesisResult {
    Element f;
    Element g;
    Certificate certificate;
    AbelianImage target_image;
    LatticeBasis lattice;
    Index index;
    std::optional<RectangularForm> form;
    Construction construction;
};

// Complete prefix code with u, v0, v1, w0, w10, w11 as branches. Without a
// chain, at least three branches follow w11. With right_chain = m the
// minimal tree with branch 1^m hangs below the last leaf; left_chain
// likewise hangs 0^m below the first.
PrefixCode build_scaffold_tree(const BinaryWord& u, const BinaryWord& v, const BinaryWord& w,
                               std::optional<std::int64_t> right_chain = std::nullopt,
                               std::optional<std::int64_t> left_chain = std::nullopt);

SynthesisResult construct_part1(const Element& f, std::int64_t c, std::int64_t d);
SynthesisResult construct_part2(const Element& f, std::int64_t c);
SynthesisResult construct_part3(const Element& f, std::int64_t d);
SynthesisResult construct_part4(const Element& f);

SynthesisResult synthesize(const Element& f, std::int64_t c, std::int64_t d);

// g with <f,g> = F. Needs gcd of the abelian image of f to be 1.
SynthesisResult complete_generating_pair(const Element& f);

// g with <f,g> of index gcd(a,b), image pZ x qZ.
SynthesisResult finite_index_pair(const Element& f);

// Every recorded block pair is a branch pair of g.
bool self_check_blocks(const SynthesisResult& result);

// Mirror image of a certificate under t -> 1 - t. The slope witness is
// copied unchanged and must be replaced by the caller.
Certificate flip_certificate(const Certificate& c);

}  // namespace thompson
