#include "thompson/certify.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "thompson/error.hpp"

namespace thompson {

Relation Relation::make(BinaryWord a, BinaryWord b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

namespace {

std::int64_t len(const BinaryWord& w) { return static_cast<std::int64_t>(w.size()); }

BinaryWord base_word(const ShiftSchema& s, std::int64_t i) {
    return s.stem + BinaryWord::repeat(s.tail, static_cast<std::size_t>(i)) + s.suffix;
}

}  // namespace

std::int64_t default_depth(const Certificate& c) {
    std::int64_t longest = len(c.w);
    for (const auto& u : c.tree.branches()) longest = std::max(longest, len(u));
    for (const auto& wit : c.witnesses) longest = std::max({longest, len(wit.from), len(wit.to)});
    for (const ShiftSchema* s : {&c.left, &c.right}) {
        longest = std::max({longest, len(s->witness.from), len(s->witness.to)});
        if (s->base_count > 0) longest = std::max(longest, len(base_word(*s, s->base_count - 1)));
    }
    return longest + 4;
}

std::string_view to_string(Reason reason) {
    switch (reason) {
        case Reason::Pass: return "pass";
        case Reason::InvalidElement: return "invalid_element";
        case Reason::Malformed: return "malformed";
        case Reason::Witness: return "witness";
        case Reason::Condition1: return "condition1";
        case Reason::Condition2: return "condition2";
        case Reason::Condition3: return "condition3";
        case Reason::Condition4: return "condition4";
        case Reason::Slope: return "slope";
    }
    return "unknown";
}

std::optional<Reason> reason_from_string(std::string_view text) {
    for (Reason r : {Reason::Pass, Reason::InvalidElement, Reason::Malformed, Reason::Witness, Reason::Condition1,
                     Reason::Condition2, Reason::Condition3, Reason::Condition4, Reason::Slope}) {
        if (to_string(r) == text) return r;
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ Closure

Closure::Closure(std::int64_t max_length) : max_length_(max_length) { new_node(0); }

std::int32_t Closure::new_node(std::int64_t min_length) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({id, {-1, -1}, min_length});
    return id;
}

std::int32_t Closure::find(std::int32_t x) {
    std::int32_t root = x;
    while (nodes_[root].parent != root) root = nodes_[root].parent;
    while (nodes_[x].parent != root) {
        const std::int32_t next = nodes_[x].parent;
        nodes_[x].parent = root;
        x = next;
    }
    return root;
}

std::optional<std::int32_t> Closure::node_of(const BinaryWord& word) {
    if (len(word) > max_length_) return std::nullopt;
    std::int32_t n = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const std::int32_t r = find(n);
        const int bit = word[i];
        if (nodes_[r].child[bit] < 0) {
            const std::int32_t c = new_node(nodes_[r].min_length + 1);
            nodes_[r].child[bit] = c;
        }
        n = nodes_[r].child[bit];
    }
    return n;
}

void Closure::lower(std::int32_t root, std::int64_t min_length) {
    std::vector<std::pair<std::int32_t, std::int64_t>> work{{root, min_length}};
    while (!work.empty()) {
        auto [x, m] = work.back();
        work.pop_back();
        x = find(x);
        if (nodes_[x].min_length <= m) continue;
        nodes_[x].min_length = m;
        for (std::int32_t c : nodes_[x].child) {
            if (c >= 0) work.push_back({c, m + 1});
        }
    }
}

void Closure::unite(std::int32_t a, std::int32_t b) {
    std::vector<std::pair<std::int32_t, std::int32_t>> work{{a, b}};
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        x = find(x);
        y = find(y);
        if (x == y) continue;
        if (nodes_[y].min_length < nodes_[x].min_length) std::swap(x, y);
        nodes_[y].parent = x;
        for (int bit = 0; bit < 2; ++bit) {
            const std::int32_t cx = nodes_[x].child[bit], cy = nodes_[y].child[bit];
            if (cx >= 0 && cy >= 0) work.push_back({cx, cy});
            else if (cx < 0) nodes_[x].child[bit] = cy;
        }
        // x already has the smaller bound; children of y may now be reachable
        // through shorter words.
        for (std::int32_t c : nodes_[x].child) {
            if (c >= 0) lower(c, nodes_[x].min_length + 1);
        }
    }
}

void Closure::add(const BinaryWord& a, const BinaryWord& b) {
    const auto na = node_of(a);
    const auto nb = node_of(b);
    if (na && nb) unite(*na, *nb);
}

bool Closure::contains(const BinaryWord& a, const BinaryWord& b) {
    if (a == b) return true;
    const auto na = node_of(a);
    const auto nb = node_of(b);
    return na && nb && find(*na) == find(*nb);
}

std::set<Relation> Closure::enumerate(std::int64_t bound) {
    bound = std::min(bound, max_length_);
    std::map<std::int32_t, std::vector<BinaryWord>> classes;
    std::vector<BinaryWord> level{BinaryWord{}};
    for (std::int64_t l = 0; l <= bound; ++l) {
        std::vector<BinaryWord> next;
        for (const auto& u : level) {
            classes[find(*node_of(u))].push_back(u);
            next.push_back(u.child(0));
            next.push_back(u.child(1));
        }
        level = std::move(next);
    }
    std::set<Relation> out;
    for (const auto& [root, words] : classes) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) out.insert(Relation::make(words[i], words[j]));
        }
    }
    return out;
}

Closure saturate(std::span<const Relation> seeds, std::int64_t max_length) {
    Closure closure(max_length);
    for (const auto& r : seeds) closure.add(r.lhs, r.rhs);
    return closure;
}

// ------------------------------------------------------------------ checks

Assignment assignment_of(const Certificate& c) { return {{"f", c.f}, {"g", c.g}}; }

bool verify_witness(const Certificate& c, const Witness& wit) {
    return has_branch_pair(eval_word(wit.word, assignment_of(c)), wit.from, wit.to);
}

bool check_schema(const Certificate& c, const ShiftSchema& s, Closure& closure, std::string* why) {
    auto fail = [&](std::string message) {
        if (why) *why = std::move(message);
        return false;
    };
    if (s.tail != 0 && s.tail != 1) return fail("tail must be 0 or 1");
    const BinaryWord y = s.stem.strip_trailing(s.tail);
    const auto j = len(s.stem) - len(y);
    const BinaryWord& from = s.witness.from;
    const BinaryWord& to = s.witness.to;
    if (from.strip_trailing(s.tail) != y || to.strip_trailing(s.tail) != y) {
        return fail("shift pair is not of the form y t^a -> y t^b");
    }
    const std::int64_t a = len(from) - len(y), b = len(to) - len(y);
    if (a - b < 1) return fail("shift does not shorten the tail");
    if (s.base_count < std::max(a - j, a - b)) return fail("too few base cases for the shift");
    try {
        if (!verify_witness(c, s.witness)) return fail("shift witness does not verify");
    } catch (const Error& e) {
        return fail(std::string("shift witness: ") + e.what());
    }
    for (std::int64_t i = 0; i < s.base_count; ++i) {
        const BinaryWord u = base_word(s, i);
        if (!closure.contains(u, c.w)) return fail("base case " + u.to_string() + " ~ w not derived");
    }
    return true;
}

bool check_slope(const Certificate& c) {
    const Element h = eval_word(c.slope.word, assignment_of(c));
    const DyadicRational alpha = word_to_dyadic(c.slope.alpha);
    if (alpha.is_zero()) return false;
    return evaluate(h, alpha) == alpha && slope_left(h, alpha) == 0 && slope_right(h, alpha) == 1;
}

Verdict certify_normal_generation(const Certificate& c, std::optional<std::int64_t> depth) {
    const std::int64_t L = depth.value_or(c.depth > 0 ? c.depth : default_depth(c));
    auto verdict = [&](Reason r, std::string detail) { return Verdict{r, std::move(detail), L}; };

    const auto branches = c.tree.branches();
    if (!has_both_digits(c.w)) return verdict(Reason::Malformed, "w must contain both digits");
    if (c.tree.front().trailing_run(0) != c.tree.front().size() ||
        c.tree.back().trailing_run(1) != c.tree.back().size()) {
        return verdict(Reason::Malformed, "tree ends are not 0^k and 1^k");
    }
    const auto family_ok = [&](const ShiftSchema& s, int tail, const char* suffix, const BinaryWord& end) {
        return s.tail == tail && s.suffix == BinaryWord(suffix) && is_prefix(s.stem, end) &&
               end.drop_prefix(s.stem.size()).trailing_run(tail) == end.size() - s.stem.size();
    };
    if (!family_ok(c.left, 0, "1", c.tree.front())) {
        return verdict(Reason::Malformed, "left schema does not cover u_1 0^i 1");
    }
    if (!family_ok(c.right, 1, "0", c.tree.back())) {
        return verdict(Reason::Malformed, "right schema does not cover u_n 1^i 0");
    }

    std::vector<Relation> seeds;
    try {
        for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
            const Witness& wit = c.witnesses[i];
            if (!verify_witness(c, wit)) {
                return verdict(Reason::Witness, "witness " + std::to_string(i) + " (" + wit.word.to_string() +
                                                    ": " + wit.from.to_string() + " -> " + wit.to.to_string() +
                                                    ") does not verify");
            }
            seeds.push_back(Relation::make(wit.from, wit.to));
        }
    } catch (const Error& e) {
        return verdict(Reason::Witness, e.what());
    }

    Closure closure = saturate(seeds, L);
    for (int bit = 0; bit < 2; ++bit) {
        if (!closure.contains(c.w, c.w.child(bit))) {
            return verdict(Reason::Condition1, "w ~ w" + std::to_string(bit) + " not derived");
        }
    }
    for (std::size_t i = 1; i + 1 < branches.size(); ++i) {
        if (!closure.contains(branches[i], c.w)) {
            return verdict(Reason::Condition2, "u_" + std::to_string(i + 1) + " = " + branches[i].to_string() +
                                                   " ~ w not derived");
        }
    }
    std::string why;
    if (!check_schema(c, c.left, closure, &why)) return verdict(Reason::Condition3, why);
    if (!check_schema(c, c.right, closure, &why)) return verdict(Reason::Condition4, why);
    try {
        if (!check_slope(c)) return verdict(Reason::Slope, "slope witness does not have slopes 1 and 2 at alpha");
    } catch (const Error& e) {
        return verdict(Reason::Slope, e.what());
    }
    return verdict(Reason::Pass, "");
}

// --------------------------------------------------------------- oracle

std::set<Relation> brute_force_relations(const Element& f, const Element& g, int word_len, int word_depth) {
    struct Entry {
        Element value;
        int last;  // index of the last generator, -1 for the empty word
    };
    const std::array<Element, 4> gens{f, invert(f), g, invert(g)};
    std::vector<BinaryWord> words{BinaryWord{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (len(words[i]) < word_depth) {
            words.push_back(words[i].child(0));
            words.push_back(words[i].child(1));
        }
    }

    std::set<Relation> out;
    std::vector<Entry> layer{{Element{}, -1}};
    for (int length = 0; length <= word_len; ++length) {
        for (const auto& e : layer) {
            for (const auto& u : words) {
                const auto v = linear_image(e.value, u);
                if (v && len(*v) <= word_depth) out.insert(Relation::make(u, *v));
            }
        }
        if (length == word_len) break;
        std::vector<Entry> next;
        for (const auto& e : layer) {
            for (int k = 0; k < 4; ++k) {
                if (e.last >= 0 && (e.last ^ 1) == k) continue;
                next.push_back({e.value * gens[k], k});
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace thompson
