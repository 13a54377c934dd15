#include "thompson/element.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "thompson/error.hpp"

namespace thompson {

namespace {

bool all_ones(const BinaryWord& w) { return w.trailing_run(1) == w.size(); }

bool is_common_caret(const BranchPair& left, const BranchPair& right) {
    auto siblings = [](const BinaryWord& a, const BinaryWord& b) {
        return !a.empty() && a.size() == b.size() && a.back() == 0 && b.back() == 1 &&
               a.bits().substr(0, a.size() - 1) == b.bits().substr(0, b.size() - 1);
    };
    return siblings(left.domain, right.domain) && siblings(left.range, right.range);
}

std::vector<BranchPair> reduce_pairs(std::span<const BranchPair> pairs) {
    std::vector<BranchPair> stack;
    stack.reserve(pairs.size());
    for (const auto& p : pairs) {
        stack.push_back(p);
        while (stack.size() >= 2 && is_common_caret(stack[stack.size() - 2], stack.back())) {
            BranchPair parent{stack.back().domain.prefix(stack.back().domain.size() - 1),
                              stack.back().range.prefix(stack.back().range.size() - 1)};
            stack.pop_back();
            stack.back() = std::move(parent);
        }
    }
    return stack;
}

// Index of the domain branch whose interval contains .s and the points just
// right of it. With `strict`, the branch containing the points just left.
std::size_t locate(std::span<const BranchPair> pairs, const BinaryWord& s, bool strict = false) {
    auto first_after = std::partition_point(pairs.begin(), pairs.end(), [&](const BranchPair& p) {
        const auto cmp = compare_points(p.domain, s);
        return strict ? cmp < 0 : cmp <= 0;
    });
    return static_cast<std::size_t>(first_after - pairs.begin()) - 1;
}

}  // namespace

std::string AbelianImage::to_string() const {
    return "(" + std::to_string(at_zero) + "," + std::to_string(at_one) + ")";
}

TreeDiagram::TreeDiagram(PrefixCode domain, PrefixCode range)
    : domain_(std::move(domain)), range_(std::move(range)) {
    if (domain_.size() != range_.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "domain has " + std::to_string(domain_.size()) + " leaves, range has " +
                        std::to_string(range_.size()));
    }
}

TreeDiagram reduce(const TreeDiagram& diagram) {
    std::vector<BranchPair> pairs;
    for (std::size_t i = 0; i < diagram.size(); ++i) pairs.push_back(diagram.pair(i));
    return Element::from_branch_pairs(pairs).diagram();
}

Element Element::x0() {
    return from_branch_pairs(std::vector<BranchPair>{{BinaryWord("00"), BinaryWord("0")},
                                                     {BinaryWord("01"), BinaryWord("10")},
                                                     {BinaryWord("1"), BinaryWord("11")}});
}

Element Element::x1() {
    return from_branch_pairs(std::vector<BranchPair>{{BinaryWord("0"), BinaryWord("0")},
                                                     {BinaryWord("100"), BinaryWord("10")},
                                                     {BinaryWord("101"), BinaryWord("110")},
                                                     {BinaryWord("11"), BinaryWord("111")}});
}

Element Element::from_diagram(const TreeDiagram& diagram) {
    std::vector<BranchPair> pairs;
    pairs.reserve(diagram.size());
    for (std::size_t i = 0; i < diagram.size(); ++i) pairs.push_back(diagram.pair(i));
    Element e;
    e.pairs_ = reduce_pairs(pairs);
    return e;
}

Element Element::from_branch_pairs(std::span<const BranchPair> pairs) {
    std::vector<BinaryWord> domain, range;
    domain.reserve(pairs.size());
    range.reserve(pairs.size());
    for (const auto& p : pairs) {
        domain.push_back(p.domain);
        range.push_back(p.range);
    }
    if (!is_complete_prefix_code(domain)) {
        throw Error(ErrorKind::InvalidCode, "domain words are not a complete prefix code");
    }
    if (!is_complete_prefix_code(range)) {
        throw Error(ErrorKind::InvalidCode, "range words are not a complete prefix code");
    }
    Element e;
    e.pairs_ = reduce_pairs(pairs);
    return e;
}

TreeDiagram Element::diagram() const {
    std::vector<BinaryWord> domain, range;
    for (const auto& p : pairs_) {
        domain.push_back(p.domain);
        range.push_back(p.range);
    }
    return {PrefixCode(std::move(domain)), PrefixCode(std::move(range))};
}

Element compose(const Element& f, const Element& g) {
    // Walk the common refinement of f's range code and g's domain code.
    const auto fp = f.pairs();
    const auto gp = g.pairs();
    std::vector<BranchPair> out;
    out.reserve(fp.size() + gp.size());
    std::size_t i = 0, j = 0;
    while (i < fp.size() && j < gp.size()) {
        const BinaryWord& a = fp[i].range;
        const BinaryWord& b = gp[j].domain;
        if (a == b) {
            out.push_back({fp[i].domain, gp[j].range});
            ++i;
            ++j;
        } else if (is_prefix(a, b)) {
            BinaryWord tail = b.drop_prefix(a.size());
            out.push_back({fp[i].domain + tail, gp[j].range});
            ++j;
            if (all_ones(tail)) ++i;
        } else {
            BinaryWord tail = a.drop_prefix(b.size());
            out.push_back({fp[i].domain, gp[j].range + tail});
            ++i;
            if (all_ones(tail)) ++j;
        }
    }
    return Element::from_branch_pairs(out);
}

Element invert(const Element& f) {
    std::vector<BranchPair> swapped;
    swapped.reserve(f.size());
    for (const auto& p : f.pairs()) swapped.push_back({p.range, p.domain});
    return Element::from_branch_pairs(swapped);
}

Element power(const Element& f, std::int64_t exponent) {
    Element base = exponent < 0 ? invert(f) : f;
    std::uint64_t n = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                   : static_cast<std::uint64_t>(exponent);
    Element result;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

DyadicRational evaluate(const Element& f, const DyadicRational& t) {
    if (t.is_one()) return t;
    const BinaryWord s = t.to_word();
    const auto pairs = f.pairs();
    const BranchPair& p = pairs[locate(pairs, s)];
    return DyadicRational::from_word(p.range + s.drop_prefix(p.domain.size()));
}

std::int64_t slope_right(const Element& f, const DyadicRational& t) {
    if (t.is_one()) throw Error(ErrorKind::OutOfRange, "no right slope at 1");
    const auto pairs = f.pairs();
    const BranchPair& p = pairs[locate(pairs, t.to_word())];
    return static_cast<std::int64_t>(p.domain.size()) - static_cast<std::int64_t>(p.range.size());
}

std::int64_t slope_left(const Element& f, const DyadicRational& t) {
    if (t.is_zero()) throw Error(ErrorKind::OutOfRange, "no left slope at 0");
    const auto pairs = f.pairs();
    const BranchPair& p = t.is_one() ? pairs.back() : pairs[locate(pairs, t.to_word(), true)];
    return static_cast<std::int64_t>(p.domain.size()) - static_cast<std::int64_t>(p.range.size());
}

AbelianImage abelianize(const Element& f) {
    const auto pairs = f.pairs();
    auto log_slope = [](const BranchPair& p) {
        return static_cast<std::int64_t>(p.domain.size()) -
               static_cast<std::int64_t>(p.range.size());
    };
    return {log_slope(pairs.front()), log_slope(pairs.back())};
}

bool in_derived(const Element& f) { return abelianize(f) == AbelianImage{}; }

std::optional<BinaryWord> linear_image(const Element& f, const BinaryWord& u) {
    const auto pairs = f.pairs();
    std::size_t i = locate(pairs, u);
    if (is_prefix(pairs[i].domain, u)) return pairs[i].range + u.drop_prefix(pairs[i].domain.size());

    // u is an internal node of the domain tree: every branch below it must be
    // the same translate.
    std::optional<BinaryWord> image;
    for (; i < pairs.size() && is_prefix(u, pairs[i].domain); ++i) {
        const std::size_t tail = pairs[i].domain.size() - u.size();
        const BinaryWord& v = pairs[i].range;
        if (v.size() < tail || v.bits().substr(v.size() - tail) != pairs[i].domain.bits().substr(u.size())) {
            return std::nullopt;
        }
        BinaryWord candidate = v.prefix(v.size() - tail);
        if (image && *image != candidate) return std::nullopt;
        image = std::move(candidate);
    }
    return image;
}

bool has_branch_pair(const Element& f, const BinaryWord& u, const BinaryWord& v) {
    const auto image = linear_image(f, u);
    return image && *image == v;
}

Element flip(const Element& f) {
    std::vector<BranchPair> mirrored;
    mirrored.reserve(f.size());
    const auto pairs = f.pairs();
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        mirrored.push_back({it->domain.complement(), it->range.complement()});
    }
    return Element::from_branch_pairs(mirrored);
}

// --------------------------------------------------------------- GroupWord

GroupWord::GroupWord(std::vector<Letter> letters) {
    for (auto& l : letters) {
        if (l.exponent != 0) letters_.push_back(std::move(l));
    }
}

GroupWord GroupWord::symbol(std::string name, std::int64_t exponent) {
    return GroupWord({Letter{std::move(name), exponent}});
}

std::size_t GroupWord::length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
    return n;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->symbol, -it->exponent});
    return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return GroupWord(std::move(out));
}

GroupWord GroupWord::substitute(const std::map<std::string, std::string>& names) const {
    std::vector<Letter> out = letters_;
    for (auto& l : out) {
        if (auto it = names.find(l.symbol); it != names.end()) l.symbol = it->second;
    }
    return GroupWord(std::move(out));
}

std::string GroupWord::to_string() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += l.symbol;
        if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return a.inverse() * b.inverse() * a * b;
}

namespace {

class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    GroupWord parse_all() {
        GroupWord w = sequence();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    GroupWord sequence() {
        GroupWord w;
        while (true) {
            skip_space();
            if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']') return w;
            w = w * item();
        }
    }

    GroupWord item() {
        GroupWord base;
        if (text_[pos_] == '[') {
            ++pos_;
            GroupWord a = sequence();
            expect(',');
            GroupWord b = sequence();
            expect(']');
            base = commutator(a, b);
        } else if (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
            std::size_t start = pos_++;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            base = GroupWord::symbol(std::string(text_.substr(start, pos_ - start)));
        } else {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            std::int64_t k = exponent();
            if (k == 0) fail("zero exponent");
            if (base.letters().size() == 1) {
                Letter l = base.letters().front();
                l.exponent *= k;
                return GroupWord({l});
            }
            GroupWord result;
            const GroupWord unit = k < 0 ? base.inverse() : base;
            for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result = result * unit;
            return result;
        }
        return base;
    }

    std::int64_t exponent() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view digits = text_.substr(start, pos_ - start);
        if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
        std::int64_t k = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("bad exponent");
        return k;
    }

    void expect(char ch) {
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, what + " in group word '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text) { return WordParser(text).parse_all(); }

Element eval_word(const GroupWord& word, const Assignment& assignment) {
    Element result;
    for (const auto& l : word.letters()) {
        auto it = assignment.find(l.symbol);
        if (it == assignment.end()) throw Error(ErrorKind::UnknownSymbol, "no element for '" + l.symbol + "'");
        result = result * power(it->second, l.exponent);
    }
    return result;
}

}  // namespace thompson
