#pragma once

// Finite binary words, dyadic rationals and complete prefix codes.
//
// A word u addresses the dyadic interval [u] = [.u, .u + 2^-|u|]; the empty
// word addresses [0,1]. A complete prefix code is the left-to-right leaf list
// of a finite full binary tree, which is how trees are stored everywhere in
// this library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;

class BinaryWord {
public:
    BinaryWord() = default;

    // Strict constructor: only '0' and '1' are accepted.
    explicit BinaryWord(std::string_view bits);

    // Text form: "e" (or "") is the empty word.
    static BinaryWord parse(std::string_view text);
    static BinaryWord repeat(int bit, std::size_t count);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
    int back() const { return bits_.back() == '1' ? 1 : 0; }

    std::string_view bits() const noexcept { return bits_; }
    std::string to_string() const { return bits_.empty() ? std::string("e") : bits_; }

    BinaryWord child(int bit) const;
    BinaryWord prefix(std::size_t length) const;
    BinaryWord drop_prefix(std::size_t length) const;
    BinaryWord complement() const;
    BinaryWord strip_trailing(int bit) const;
    std::size_t trailing_run(int bit) const noexcept;

    BinaryWord& operator+=(const BinaryWord& other) {
        bits_ += other.bits_;
        return *this;
    }
    friend BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) { return lhs += rhs; }

    // Lexicographic with 0 < 1 and a prefix before its extensions.
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    std::string bits_;
};

bool is_prefix(const BinaryWord& u, const BinaryWord& v);
bool is_strict_prefix(const BinaryWord& u, const BinaryWord& v);
bool is_incomparable(const BinaryWord& u, const BinaryWord& v);

// [u] < [v] for incomparable words; throws OutOfRange on comparable input.
bool interval_less(const BinaryWord& u, const BinaryWord& v);

// Orders the points .u and .v (trailing zeros do not matter).
std::strong_ordering compare_points(const BinaryWord& u, const BinaryWord& v);

// Words containing both digits: everything except e, 0^n and 1^n.
bool has_both_digits(const BinaryWord& u);

// Exact k / 2^n in [0,1], normalized to odd k or n = 0.
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(BigInt numerator, std::uint64_t exponent);

    static DyadicRational zero() { return {}; }
    static DyadicRational one() { return {1, 0}; }
    static DyadicRational from_word(const BinaryWord& u);

    // Accepts "k/m" with m a power of two, "0", "1" and binary ".s".
    static DyadicRational parse(std::string_view text);

    const BigInt& numerator() const noexcept { return numerator_; }
    std::uint64_t exponent() const noexcept { return exponent_; }
    bool is_one() const { return exponent_ == 0 && numerator_ == 1; }
    bool is_zero() const { return numerator_ == 0; }

    // The finite expansion s with .s = value, trailing zeros stripped.
    // Not defined for 1.
    BinaryWord to_word() const;

    std::string to_string() const;
    std::string to_binary() const;

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

private:
    BigInt numerator_ = 0;
    std::uint64_t exponent_ = 0;
};

DyadicRational word_to_dyadic(const BinaryWord& u);

struct DyadicInterval {
    BinaryWord address;

    DyadicRational left() const { return DyadicRational::from_word(address); }
    DyadicRational right() const;
};

bool is_complete_prefix_code(std::span<const BinaryWord> branches);

// Leaf list of a finite full binary tree, left to right.
class PrefixCode {
public:
    PrefixCode() : branches_{BinaryWord{}} {}
    explicit PrefixCode(std::vector<BinaryWord> branches);

    // Smallest full tree having every given word as a branch. The words must
    // be pairwise incomparable.
    static PrefixCode minimal_containing(std::span<const BinaryWord> words);
    static PrefixCode minimal_with_branch(const BinaryWord& word);
    static PrefixCode caret() { return minimal_with_branch(BinaryWord("0")); }

    std::span<const BinaryWord> branches() const noexcept { return branches_; }
    std::size_t size() const noexcept { return branches_.size(); }
    std::size_t carets() const noexcept { return branches_.size() - 1; }
    const BinaryWord& operator[](std::size_t i) const { return branches_[i]; }
    const BinaryWord& front() const { return branches_.front(); }
    const BinaryWord& back() const { return branches_.back(); }

    std::optional<std::size_t> index_of(const BinaryWord& branch) const;
    bool contains(const BinaryWord& branch) const { return index_of(branch).has_value(); }

    // Replaces the leaf `branch` by the tree `subtree` hung below it.
    PrefixCode attach(const BinaryWord& branch, const PrefixCode& subtree) const;

    // Mirror image under t -> 1 - t.
    PrefixCode flipped() const;

    friend bool operator==(const PrefixCode&, const PrefixCode&) = default;

private:
    std::vector<BinaryWord> branches_;
};

}  // namespace thompson

template <>
struct std::hash<thompson::BinaryWord> {
    std::size_t operator()(const thompson::BinaryWord& w) const noexcept {
        return std::hash<std::string_view>{}(w.bits());
    }
};
