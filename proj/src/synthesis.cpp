#include "thompson/synthesis.hpp"

#include <numeric>

#include "thompson/error.hpp"

namespace thompson {

namespace {

BinaryWord zeros(std::int64_t n) { return BinaryWord::repeat(0, static_cast<std::size_t>(n)); }
BinaryWord ones(std::int64_t n) { return BinaryWord::repeat(1, static_cast<std::size_t>(n)); }
BinaryWord operator+(const BinaryWord& a, const char* bits) { return a + BinaryWord(bits); }

const PrefixCode& s_plus() {
    static const PrefixCode code(std::vector<BinaryWord>{BinaryWord("0"), BinaryWord("100"), BinaryWord("101"),
                                                         BinaryWord("11")});
    return code;
}

const PrefixCode& s_minus() {
    static const PrefixCode code(std::vector<BinaryWord>{BinaryWord("0"), BinaryWord("10"), BinaryWord("110"),
                                                         BinaryWord("111")});
    return code;
}

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::SynthesisFailed, message); }

void require(bool condition, const std::string& message) {
    if (!condition) fail(message);
}

// Witness for p -> q using `symbol` or its inverse, whichever carries it.
Witness directed(const Element& e, const std::string& symbol, const BinaryWord& p, const BinaryWord& q) {
    if (has_branch_pair(e, p, q)) return {GroupWord::symbol(symbol), p, q};
    if (has_branch_pair(e, q, p)) return {GroupWord::symbol(symbol, -1), p, q};
    fail("no branch pair " + p.to_string() + " <-> " + q.to_string() + " for " + symbol);
}

PrefixCode attach_all(PrefixCode tree, const std::vector<std::pair<BinaryWord, PrefixCode>>& attachments) {
    for (const auto& [branch, subtree] : attachments) tree = tree.attach(branch, subtree);
    return tree;
}

// Smallest passing depth from the default upwards, then drop witnesses not
// needed for a pass.
Certificate finalize(Certificate cert) {
    const std::int64_t base = default_depth(cert);
    Verdict verdict;
    for (std::int64_t extra = 0; extra <= 12; extra += 2) {
        cert.depth = base + extra;
        verdict = certify_normal_generation(cert);
        if (verdict.pass()) break;
    }
    if (!verdict.pass()) {
        fail("certificate does not pass: " + std::string(to_string(verdict.reason)) + " " + verdict.detail);
    }
    for (std::size_t i = 0; i < cert.witnesses.size();) {
        Certificate trial = cert;
        trial.witnesses.erase(trial.witnesses.begin() + static_cast<std::ptrdiff_t>(i));
        if (certify_normal_generation(trial).pass()) cert = std::move(trial);
        else ++i;
    }
    return cert;
}

enum class LeftEnd { Chain, Mirror };
enum class RightEnd { Tails, Flat };

struct Plan {
    int part;
    LeftEnd left;
    RightEnd right;
    std::int64_t c = 0;   // > 0 for LeftEnd::Chain
    std::int64_t d = 0;   // |d| for RightEnd::Tails
    bool d_negative = false;
    bool inverted = false;
};

SynthesisResult assemble(const Element& f, const Plan& plan, AbelianImage target) {
    const UVWTriple t = find_uvw(f);
    const BinaryWord &u = t.u, &v = t.v, &w = t.w;

    std::optional<OneTail> right_tail, left_tail;
    if (plan.right == RightEnd::Flat) right_tail = one_tail_pair(f);
    if (plan.left == LeftEnd::Mirror) left_tail = one_tail_pair(flip(f));

    const PrefixCode tree =
        build_scaffold_tree(u, v, w, right_tail ? std::optional(right_tail->m) : std::nullopt,
                            left_tail ? std::optional(left_tail->m) : std::nullopt);
    const std::size_t n = tree.size();
    auto U = [&](std::size_t i) -> const BinaryWord& { return tree[i - 1]; };
    const std::size_t k = *tree.index_of(w + "0") + 1;
    require(k >= 5 && k + 5 <= n, "w0 is not in position 5..n-5");
    require(U(k + 1) == w + "10" && U(k + 2) == w + "11", "w0, w10, w11 not consecutive");

    const BinaryWord& u1 = U(1);
    const BinaryWord& un = U(n);
    const std::int64_t c = plan.c, D = plan.d;

    std::vector<std::pair<BinaryWord, PrefixCode>> plus, minus;
    if (plan.left == LeftEnd::Chain) {
        plus.push_back({u1, PrefixCode::minimal_with_branch(zeros(c + 1))});
        minus.push_back({u1, PrefixCode::minimal_with_branch(ones(c))});
    } else {
        plus.push_back({u1, PrefixCode::minimal_with_branch(ones(2))});
        minus.push_back({u1, PrefixCode::caret()});
    }
    minus.push_back({w + "0", PrefixCode::caret()});
    plus.push_back({w + "10", s_plus()});
    minus.push_back({w + "10", s_minus()});
    if (plan.right == RightEnd::Tails) {
        auto& first = plan.d_negative ? minus : plus;
        auto& second = plan.d_negative ? plus : minus;
        first.push_back({un, PrefixCode::minimal_with_branch(ones(D + 1))});
        second.push_back({w + "11", PrefixCode::caret()});
        second.push_back({un, PrefixCode::minimal_with_branch(zeros(D))});
    } else {
        minus.push_back({w + "11", PrefixCode::caret()});
        plus.push_back({un, PrefixCode::minimal_with_branch(zeros(2))});
        minus.push_back({un, PrefixCode::caret()});
    }
    const PrefixCode r_plus = attach_all(tree, plus);
    const PrefixCode r_minus = attach_all(tree, minus);

    Construction con;
    con.part = plan.part;
    con.inverted = plan.inverted;
    con.uvw = t;
    con.tree = tree;
    con.k = k;
    con.carets_plus = r_plus.carets() - tree.carets();
    con.carets_minus = r_minus.carets() - tree.carets();
    require(con.carets_plus == con.carets_minus, "caret counts differ");
    if (plan.part == 1) require(con.carets_plus == static_cast<std::size_t>(c + 1 + 3 + D + 1), "caret count");
    if (plan.part == 2) require(con.carets_plus == static_cast<std::size_t>(c + 6), "caret count");

    const Element g0 = Element::from_diagram(TreeDiagram(r_plus, r_minus));

    // Blocks as pairs of the constructed diagram.
    auto add = [&](const char* block, BinaryWord p, BinaryWord q) {
        con.blocks.push_back({block, std::move(p), std::move(q)});
    };
    if (plan.left == LeftEnd::Chain) {
        add("A", u1 + zeros(c + 1), u1 + "0");
        for (std::int64_t i = 1; i <= c - 1; ++i) add("A", u1 + zeros(c + 1 - i) + "1", u1 + ones(i) + "0");
        add("A", u1 + "01", u1 + ones(c));
        add("A", u1 + "1", U(2));
    } else {
        add("A", u1 + "0", u1 + "0");
        add("A", u1 + "10", u1 + "1");
        add("A", u1 + "11", U(2));
    }
    for (std::size_t i = 2; i + 2 <= k; ++i) add("A", U(i), U(i + 1));
    add("A", U(k - 1), w + "00");
    add("A", w + "0", w + "01");
    const Element x1 = Element::x1();
    for (const auto& p : x1.pairs()) add("B", w + "10" + p.domain, w + "10" + p.range);

    const char* cname = plan.right == RightEnd::Tails ? "C" : "C'";
    std::vector<std::pair<BinaryWord, BinaryWord>> cpairs{{w + "11", w + "110"}, {U(k + 3), w + "111"}};
    for (std::size_t i = k + 4; i + 1 <= n; ++i) cpairs.push_back({U(i), U(i - 1)});
    if (plan.right == RightEnd::Tails) {
        cpairs.push_back({un + "0", U(n - 1)});
        cpairs.push_back({un + "10", un + zeros(D)});
        for (std::int64_t i = 2; i <= D; ++i) cpairs.push_back({un + ones(i) + "0", un + zeros(D + 1 - i) + "1"});
        cpairs.push_back({un + ones(D + 1), un + "1"});
    } else {
        cpairs.push_back({un + "00", U(n - 1)});
        cpairs.push_back({un + "01", un + "0"});
        cpairs.push_back({un + "1", un + "1"});
    }
    for (auto& [p, q] : cpairs) {
        if (plan.d_negative) add(cname, q, p);
        else add(cname, p, q);
    }
    for (const auto& b : con.blocks) require(has_branch_pair(g0, b.from, b.to), "block " + b.block + " pair missing");

    const Element g = plan.inverted ? invert(g0) : g0;
    require(abelianize(g) == target, "abelian image of g differs from the target");

    Certificate cert;
    cert.f = f;
    cert.g = g;
    cert.tree = tree;
    cert.w = w;
    cert.witnesses.push_back(directed(f, "f", u, v));
    cert.witnesses.push_back(directed(f, "f", v, w));
    if (plan.left == LeftEnd::Chain) {
        for (std::int64_t i = 1; i <= c - 1; ++i) {
            cert.witnesses.push_back(directed(g, "g", u1 + zeros(c + 1 - i) + "1", u1 + ones(i) + "0"));
        }
        cert.witnesses.push_back(directed(g, "g", u1 + "01", u1 + ones(c)));
        cert.witnesses.push_back(directed(g, "g", u1 + "1", U(2)));
    }
    for (std::size_t i = 2; i + 2 <= k; ++i) cert.witnesses.push_back(directed(g, "g", U(i), U(i + 1)));
    // Skip w11 -> w110 and, for the flat end, the pairs below u_n.
    const std::size_t c_end = plan.right == RightEnd::Tails ? cpairs.size() - 1 : cpairs.size() - 3;
    for (std::size_t i = 1; i < c_end; ++i) cert.witnesses.push_back(directed(g, "g", cpairs[i].first, cpairs[i].second));

    if (plan.left == LeftEnd::Chain) {
        cert.left = {0, u1, BinaryWord("1"), directed(g, "g", u1 + zeros(c + 1), u1 + "0"), c + 1};
    } else {
        const std::int64_t r = static_cast<std::int64_t>(u1.size()) - left_tail->m;
        cert.left = {0, zeros(r), BinaryWord("1"),
                     directed(f, "f", zeros(left_tail->m), zeros(left_tail->m - left_tail->ell)), left_tail->m};
    }
    if (plan.right == RightEnd::Tails) {
        cert.right = {1, un, BinaryWord("0"), directed(g, "g", un + ones(D + 1), un + "1"), D + 1};
    } else {
        const std::int64_t r = static_cast<std::int64_t>(un.size()) - right_tail->m;
        cert.right = {1, ones(r), BinaryWord("0"),
                      directed(f, "f", ones(right_tail->m), ones(right_tail->m - right_tail->ell)), right_tail->m};
    }
    const BinaryWord alpha = w + "101";
    cert.slope = {GroupWord::symbol("g", slope_right(g, word_to_dyadic(alpha)) == 1 ? 1 : -1), alpha};

    SynthesisResult result;
    result.f = f;
    result.g = g;
    result.certificate = finalize(std::move(cert));
    result.target_image = target;
    const AbelianImage a = abelianize(f);
    result.lattice = {{a.at_zero, a.at_one}, {target.at_zero, target.at_one}};
    result.index = index_of(result.lattice);
    result.construction = std::move(con);
    return result;
}

void require_nontrivial(const Element& f) {
    if (f.is_identity()) throw Error(ErrorKind::IdentityInput, "f is the identity");
}

}  // namespace

PrefixCode build_scaffold_tree(const BinaryWord& u, const BinaryWord& v, const BinaryWord& w,
                               std::optional<std::int64_t> right_chain, std::optional<std::int64_t> left_chain) {
    const bool ordered = is_incomparable(u, v) && is_incomparable(v, w) && is_incomparable(u, w) &&
                         interval_less(u, v) && interval_less(v, w);
    if (!ordered || !has_both_digits(u) || !has_both_digits(v) || !has_both_digits(w)) {
        throw Error(ErrorKind::InvalidTriple, "need [u] < [v] < [w] with words containing both digits");
    }
    const std::vector<BinaryWord> required{u, v + "0", v + "1", w + "0", w + "10", w + "11"};
    PrefixCode tree = PrefixCode::minimal_containing(required);
    if (right_chain || left_chain) {
        if (right_chain) tree = tree.attach(tree.back(), PrefixCode::minimal_with_branch(ones(*right_chain)));
        if (left_chain) tree = tree.attach(tree.front(), PrefixCode::minimal_with_branch(zeros(*left_chain)));
        return tree;
    }
    const std::size_t after = tree.size() - 1 - *tree.index_of(w + "11");
    if (after < 3) tree = tree.attach(tree.back(), s_minus());
    return tree;
}

SynthesisResult construct_part1(const Element& f, std::int64_t c, std::int64_t d) {
    require_nontrivial(f);
    if (c == 0 || d == 0) throw Error(ErrorKind::ZeroTarget, "part 1 needs c != 0 and d != 0");
    const bool inverted = c < 0;
    const std::int64_t cc = inverted ? -c : c, dd = inverted ? -d : d;
    Plan plan{1, LeftEnd::Chain, RightEnd::Tails, cc, dd < 0 ? -dd : dd, dd < 0, inverted};
    return assemble(f, plan, {c, d});
}

SynthesisResult construct_part2(const Element& f, std::int64_t c) {
    require_nontrivial(f);
    if (c == 0) throw Error(ErrorKind::ZeroTarget, "part 2 needs c != 0");
    if (abelianize(f).at_one == 0) throw Error(ErrorKind::PreconditionViolated, "f has slope 1 at 1-");
    Plan plan{2, LeftEnd::Chain, RightEnd::Flat, c < 0 ? -c : c, 0, false, c < 0};
    return assemble(f, plan, {c, 0});
}

SynthesisResult construct_part3(const Element& f, std::int64_t d) {
    require_nontrivial(f);
    if (d == 0) throw Error(ErrorKind::ZeroTarget, "part 3 needs d != 0");
    if (abelianize(f).at_zero == 0) throw Error(ErrorKind::PreconditionViolated, "f has slope 1 at 0+");
    const SynthesisResult mirror = construct_part2(flip(f), d);

    SynthesisResult result;
    result.f = f;
    result.g = flip(mirror.g);
    Certificate cert = flip_certificate(mirror.certificate);
    cert.slope = {mirror.certificate.slope.word.inverse(), cert.w + "1"};
    const Verdict verdict = certify_normal_generation(cert);
    require(verdict.pass(), "mirrored certificate does not pass: " + std::string(to_string(verdict.reason)));
    result.certificate = std::move(cert);
    result.target_image = {0, d};
    require(abelianize(result.g) == result.target_image, "abelian image of g differs from the target");
    const AbelianImage a = abelianize(f);
    result.lattice = {{a.at_zero, a.at_one}, {0, d}};
    result.index = index_of(result.lattice);

    Construction con = mirror.construction;
    con.part = 3;
    con.flipped = true;
    con.tree = con.tree.flipped();
    con.uvw = {con.uvw.sign, con.uvw.u.complement(), con.uvw.v.complement(), con.uvw.w.complement()};
    con.k = con.tree.size() + 1 - con.k;
    for (auto& b : con.blocks) {
        b.from = b.from.complement();
        b.to = b.to.complement();
    }
    result.construction = std::move(con);
    return result;
}

SynthesisResult construct_part4(const Element& f) {
    require_nontrivial(f);
    const AbelianImage a = abelianize(f);
    if (a.at_zero == 0 || a.at_one == 0) {
        throw Error(ErrorKind::PreconditionViolated, "part 4 needs non-trivial slopes at both ends");
    }
    Plan plan{4, LeftEnd::Mirror, RightEnd::Flat, 0, 0, false, false};
    return assemble(f, plan, {0, 0});
}

SynthesisResult synthesize(const Element& f, std::int64_t c, std::int64_t d) {
    require_nontrivial(f);
    const AbelianImage a = abelianize(f);
    if (a.at_zero == 0 && c == 0) throw Error(ErrorKind::PreconditionViolated, "{a,c} = {0}");
    if (a.at_one == 0 && d == 0) throw Error(ErrorKind::PreconditionViolated, "{b,d} = {0}");
    if (c != 0 && d != 0) return construct_part1(f, c, d);
    if (c != 0) return construct_part2(f, c);
    if (d != 0) return construct_part3(f, d);
    return construct_part4(f);
}

SynthesisResult complete_generating_pair(const Element& f) {
    if (f.is_identity()) throw Error(ErrorKind::NotCompletable, "f is the identity");
    const AbelianImage a = abelianize(f);
    if (std::gcd(a.at_zero, a.at_one) != 1) {
        throw Error(ErrorKind::NotCompletable, "abelian image " + a.to_string() + " is not primitive");
    }
    const Vec2 cd = complete_basis(a.at_zero, a.at_one);
    return synthesize(f, cd.x, cd.y);
}

SynthesisResult finite_index_pair(const Element& f) {
    const AbelianImage a = abelianize(f);
    if (a == AbelianImage{}) throw Error(ErrorKind::TrivialImage, "f lies in [F,F]");
    const Companion comp = companion_rectangular(a.at_zero, a.at_one);
    SynthesisResult result = synthesize(f, comp.cd.x, comp.cd.y);
    result.form = comp.form;
    return result;
}

bool self_check_blocks(const SynthesisResult& result) {
    const Construction& con = result.construction;
    // Block pairs are recorded for the diagram built, which is g or g^-1.
    for (const auto& b : con.blocks) {
        const bool ok = con.inverted ? has_branch_pair(result.g, b.to, b.from) : has_branch_pair(result.g, b.from, b.to);
        if (!ok) return false;
    }
    return !con.blocks.empty();
}

Certificate flip_certificate(const Certificate& c) {
    auto flip_witness = [](const Witness& wit) {
        return Witness{wit.word, wit.from.complement(), wit.to.complement()};
    };
    auto flip_schema = [&](const ShiftSchema& s) {
        return ShiftSchema{1 - s.tail, s.stem.complement(), s.suffix.complement(), flip_witness(s.witness),
                           s.base_count};
    };
    Certificate out;
    out.f = flip(c.f);
    out.g = flip(c.g);
    out.tree = c.tree.flipped();
    out.w = c.w.complement();
    for (const auto& wit : c.witnesses) out.witnesses.push_back(flip_witness(wit));
    out.left = flip_schema(c.right);
    out.right = flip_schema(c.left);
    out.slope = c.slope;
    out.depth = c.depth;
    return out;
}

}  // namespace thompson
