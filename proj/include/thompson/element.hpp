#pragma once

// Elements of Thompson's group F stored as reduced tree diagrams.
//
// An element is the list of branch pairs u_i -> v_i of its reduced diagram:
// it maps the dyadic interval [u_i] linearly onto [v_i]. The reduced diagram
// is unique, so two elements are equal iff their pair lists are identical.
// Products are read left to right: (f * g)(t) = g(f(t)).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/words.hpp"

namespace thompson {

struct BranchPair {
    BinaryWord domain;
    BinaryWord range;

    friend bool operator==(const BranchPair&, const BranchPair&) = default;
};

class TreeDiagram {
public:
    TreeDiagram() = default;
    // Throws LengthMismatch or InvalidCode.
    TreeDiagram(PrefixCode domain, PrefixCode range);

    const PrefixCode& domain() const noexcept { return domain_; }
    const PrefixCode& range() const noexcept { return range_; }
    std::size_t size() const noexcept { return domain_.size(); }
    BranchPair pair(std::size_t i) const { return {domain_[i], range_[i]}; }

    friend bool operator==(const TreeDiagram&, const TreeDiagram&) = default;

private:
    PrefixCode domain_;
    PrefixCode range_;
};

// Removes common carets until none are left.
TreeDiagram reduce(const TreeDiagram& diagram);

struct AbelianImage {
    std::int64_t at_zero = 0;  // log2 f'(0+)
    std::int64_t at_one = 0;   // log2 f'(1-)

    AbelianImage operator+(const AbelianImage& o) const {
        return {at_zero + o.at_zero, at_one + o.at_one};
    }
    friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
    std::string to_string() const;
};

class Element {
public:
    Element() : pairs_{BranchPair{}} {}

    static Element identity() { return {}; }
    static Element x0();
    static Element x1();

    static Element from_diagram(const TreeDiagram& diagram);
    // Throws InvalidCode / LengthMismatch.
    static Element from_branch_pairs(std::span<const BranchPair> pairs);

    std::span<const BranchPair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool is_identity() const { return pairs_.size() == 1 && pairs_.front().domain.empty(); }

    TreeDiagram diagram() const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<BranchPair> pairs_;
};

Element compose(const Element& f, const Element& g);
Element invert(const Element& f);
Element power(const Element& f, std::int64_t exponent);
inline Element operator*(const Element& f, const Element& g) { return compose(f, g); }

DyadicRational evaluate(const Element& f, const DyadicRational& t);

// log2 of the slope just right (left) of t.
std::int64_t slope_right(const Element& f, const DyadicRational& t);
std::int64_t slope_left(const Element& f, const DyadicRational& t);

AbelianImage abelianize(const Element& f);
bool in_derived(const Element& f);

// The word v with f mapping [u] linearly onto [v], if f is linear on [u].
std::optional<BinaryWord> linear_image(const Element& f, const BinaryWord& u);
bool has_branch_pair(const Element& f, const BinaryWord& u, const BinaryWord& v);

// Conjugation by t -> 1 - t.
Element flip(const Element& f);

// ------------------------------------------------------------- group words

struct Letter {
    std::string symbol;
    std::int64_t exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    // Whitespace-separated tokens `name` or `name^k`. A name is a letter
    // followed by digits, so "x0x1^-1" reads as x0 x1^-1. `[A, B]` expands
    // to the commutator A^-1 B^-1 A B.
    static GroupWord parse(std::string_view text);
    static GroupWord symbol(std::string name, std::int64_t exponent = 1);

    std::span<const Letter> letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t length() const;

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& other) const;

    // Renames symbols; unmapped symbols are kept.
    GroupWord substitute(const std::map<std::string, std::string>& names) const;

    std::string to_string() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

GroupWord commutator(const GroupWord& a, const GroupWord& b);

using Assignment = std::map<std::string, Element, std::less<>>;

// Throws UnknownSymbol.
Element eval_word(const GroupWord& word, const Assignment& assignment);

}  // namespace thompson
