#include "thompson/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "thompson/error.hpp"

namespace thompson {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidCode: return "InvalidCode";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::IdentityInput: return "IdentityInput";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::ZeroTarget: return "ZeroTarget";
        case ErrorKind::NotCompletable: return "NotCompletable";
        case ErrorKind::TrivialImage: return "TrivialImage";
        case ErrorKind::InvalidTriple: return "InvalidTriple";
        case ErrorKind::SynthesisFailed: return "SynthesisFailed";
    }
    return "Error";
}

// ---------------------------------------------------------------- BinaryWord

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
    for (char ch : bits_) {
        if (ch != '0' && ch != '1') {
            throw Error(ErrorKind::Parse, "not a binary word: '" + std::string(bits) + "'");
        }
    }
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text == "e" || text.empty()) return {};
    return BinaryWord(text);
}

BinaryWord BinaryWord::repeat(int bit, std::size_t count) {
    BinaryWord w;
    w.bits_.assign(count, bit ? '1' : '0');
    return w;
}

BinaryWord BinaryWord::child(int bit) const {
    BinaryWord w = *this;
    w.bits_.push_back(bit ? '1' : '0');
    return w;
}

BinaryWord BinaryWord::prefix(std::size_t length) const {
    BinaryWord w;
    w.bits_ = bits_.substr(0, length);
    return w;
}

BinaryWord BinaryWord::drop_prefix(std::size_t length) const {
    BinaryWord w;
    if (length < bits_.size()) w.bits_ = bits_.substr(length);
    return w;
}

BinaryWord BinaryWord::complement() const {
    BinaryWord w = *this;
    for (char& ch : w.bits_) ch = ch == '0' ? '1' : '0';
    return w;
}

BinaryWord BinaryWord::strip_trailing(int bit) const {
    return prefix(bits_.size() - trailing_run(bit));
}

std::size_t BinaryWord::trailing_run(int bit) const noexcept {
    const char ch = bit ? '1' : '0';
    std::size_t run = 0;
    while (run < bits_.size() && bits_[bits_.size() - 1 - run] == ch) ++run;
    return run;
}

bool is_prefix(const BinaryWord& u, const BinaryWord& v) {
    return u.size() <= v.size() && v.bits().substr(0, u.size()) == u.bits();
}

bool is_strict_prefix(const BinaryWord& u, const BinaryWord& v) {
    return u.size() < v.size() && is_prefix(u, v);
}

bool is_incomparable(const BinaryWord& u, const BinaryWord& v) {
    return !is_prefix(u, v) && !is_prefix(v, u);
}

bool interval_less(const BinaryWord& u, const BinaryWord& v) {
    if (!is_incomparable(u, v)) {
        throw Error(ErrorKind::OutOfRange,
                    "interval order needs incomparable words, got " + u.to_string() + " and " +
                        v.to_string());
    }
    return u < v;
}

std::strong_ordering compare_points(const BinaryWord& u, const BinaryWord& v) {
    const std::size_t n = std::max(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int a = i < u.size() ? u[i] : 0;
        const int b = i < v.size() ? v[i] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

bool has_both_digits(const BinaryWord& u) {
    const auto bits = u.bits();
    return bits.find('0') != std::string_view::npos && bits.find('1') != std::string_view::npos;
}

// ------------------------------------------------------------ DyadicRational

DyadicRational::DyadicRational(BigInt numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
    if (numerator_ < 0 || numerator_ > (BigInt(1) << exponent_)) {
        throw Error(ErrorKind::OutOfRange, "dyadic rational outside [0,1]");
    }
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    while (exponent_ > 0 && (numerator_ & 1) == 0) {
        numerator_ >>= 1;
        --exponent_;
    }
}

DyadicRational DyadicRational::from_word(const BinaryWord& u) {
    BigInt k = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        k <<= 1;
        k += u[i];
    }
    return {std::move(k), u.size()};
}

DyadicRational word_to_dyadic(const BinaryWord& u) { return DyadicRational::from_word(u); }

namespace {

BigInt parse_natural(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorKind::Parse, "bad dyadic '" + std::string(whole) + "'");
    BigInt value = 0;
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw Error(ErrorKind::Parse, "bad dyadic '" + std::string(whole) + "'");
        }
        value = value * 10 + (ch - '0');
    }
    return value;
}

}  // namespace

DyadicRational DyadicRational::parse(std::string_view text) {
    if (!text.empty() && text.front() == '.') return from_word(BinaryWord(text.substr(1)));
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const BigInt k = parse_natural(text, text);
        return {k, 0};
    }
    const BigInt k = parse_natural(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    std::uint64_t exponent = 0;
    if (den_text.starts_with("2^")) {
        const auto digits = den_text.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw Error(ErrorKind::Parse, "bad dyadic '" + std::string(text) + "'");
        }
    } else {
        BigInt den = parse_natural(den_text, text);
        if (den == 0 || (den & (den - 1)) != 0) {
            throw Error(ErrorKind::Parse, "denominator is not a power of two in '" +
                                              std::string(text) + "'");
        }
        while (den > 1) {
            den >>= 1;
            ++exponent;
        }
    }
    return {k, exponent};
}

BinaryWord DyadicRational::to_word() const {
    if (is_one()) throw Error(ErrorKind::OutOfRange, "1 has no finite expansion in [0,1)");
    std::string bits(exponent_, '0');
    BigInt k = numerator_;
    for (std::size_t i = 0; i < exponent_; ++i) {
        if ((k & 1) != 0) bits[exponent_ - 1 - i] = '1';
        k >>= 1;
    }
    return BinaryWord(bits);
}

std::string DyadicRational::to_string() const {
    if (exponent_ == 0) return numerator_.str();
    return numerator_.str() + "/" + (BigInt(1) << exponent_).str();
}

std::string DyadicRational::to_binary() const {
    if (is_one()) return "1";
    return "." + to_word().to_string();
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    const std::uint64_t e = std::max(a.exponent_, b.exponent_);
    const BigInt lhs = a.numerator_ << (e - a.exponent_);
    const BigInt rhs = b.numerator_ << (e - b.exponent_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

DyadicRational DyadicInterval::right() const {
    // .u + 2^-|u|
    const DyadicRational left_end = left();
    const std::uint64_t n = address.size();
    BigInt k = left_end.numerator() << (n - left_end.exponent());
    return {k + 1, n};
}

// ---------------------------------------------------------------- PrefixCode

bool is_complete_prefix_code(std::span<const BinaryWord> branches) {
    // Merge sibling leaves p0, p1 into p from left to right; the leaves of a
    // full tree, in order, collapse to the single root.
    std::vector<BinaryWord> stack;
    for (const auto& leaf : branches) {
        stack.push_back(leaf);
        while (stack.size() >= 2) {
            const BinaryWord& right = stack[stack.size() - 1];
            const BinaryWord& left = stack[stack.size() - 2];
            if (right.empty() || left.size() != right.size() || left.back() != 0 ||
                right.back() != 1 || left.prefix(left.size() - 1) != right.prefix(right.size() - 1)) {
                break;
            }
            BinaryWord parent = left.prefix(left.size() - 1);
            stack.pop_back();
            stack.back() = std::move(parent);
        }
    }
    return stack.size() == 1 && stack.front().empty();
}

PrefixCode::PrefixCode(std::vector<BinaryWord> branches) : branches_(std::move(branches)) {
    if (!is_complete_prefix_code(branches_)) {
        std::string listing;
        for (const auto& b : branches_) listing += " " + b.to_string();
        throw Error(ErrorKind::InvalidCode, "not a complete prefix code:" + listing);
    }
}

PrefixCode PrefixCode::minimal_containing(std::span<const BinaryWord> words) {
    std::vector<BinaryWord> internal;
    for (const auto& w : words) {
        for (std::size_t len = 0; len < w.size(); ++len) internal.push_back(w.prefix(len));
    }
    std::sort(internal.begin(), internal.end());
    internal.erase(std::unique(internal.begin(), internal.end()), internal.end());
    if (internal.empty()) return PrefixCode{};

    std::vector<BinaryWord> leaves;
    for (const auto& node : internal) {
        for (int bit : {0, 1}) {
            BinaryWord c = node.child(bit);
            if (!std::binary_search(internal.begin(), internal.end(), c)) {
                leaves.push_back(std::move(c));
            }
        }
    }
    std::sort(leaves.begin(), leaves.end());
    for (const auto& w : words) {
        if (!std::binary_search(leaves.begin(), leaves.end(), w)) {
            throw Error(ErrorKind::InvalidCode,
                        "words are not pairwise incomparable (" + w.to_string() + ")");
        }
    }
    return PrefixCode(std::move(leaves));
}

PrefixCode PrefixCode::minimal_with_branch(const BinaryWord& word) {
    return minimal_containing(std::span<const BinaryWord>(&word, 1));
}

std::optional<std::size_t> PrefixCode::index_of(const BinaryWord& branch) const {
    auto it = std::lower_bound(branches_.begin(), branches_.end(), branch);
    if (it == branches_.end() || *it != branch) return std::nullopt;
    return static_cast<std::size_t>(it - branches_.begin());
}

PrefixCode PrefixCode::attach(const BinaryWord& branch, const PrefixCode& subtree) const {
    const auto index = index_of(branch);
    if (!index) throw Error(ErrorKind::InvalidCode, branch.to_string() + " is not a branch");
    std::vector<BinaryWord> out;
    out.reserve(branches_.size() + subtree.size() - 1);
    out.insert(out.end(), branches_.begin(), branches_.begin() + *index);
    for (const auto& leaf : subtree.branches()) out.push_back(branch + leaf);
    out.insert(out.end(), branches_.begin() + *index + 1, branches_.end());
    PrefixCode result;
    result.branches_ = std::move(out);
    return result;
}

PrefixCode PrefixCode::flipped() const {
    PrefixCode result;
    result.branches_.clear();
    for (auto it = branches_.rbegin(); it != branches_.rend(); ++it) {
        result.branches_.push_back(it->complement());
    }
    return result;
}

}  // namespace thompson
