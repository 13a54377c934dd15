#pragma once

// Certificates that <f,g> contains the derived subgroup, and their checker.
//
// The checker consumes only the Certificate record. Finite relations come
// from witness words evaluated on f and g; the closure under symmetry,
// transitivity and suffix extension is computed up to a length bound; the
// two infinite families at the ends of T are handled by shift schemas.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

// Unordered pair of words, smaller word first.
struct Relation {
    BinaryWord lhs;
    BinaryWord rhs;

    static Relation make(BinaryWord a, BinaryWord b);

    friend auto operator<=>(const Relation&, const Relation&) = default;
    friend bool operator==(const Relation&, const Relation&) = default;
};

// eval(word) is claimed to have the branch pair from -> to.
struct Witness {
    GroupWord word;
    BinaryWord from;
    BinaryWord to;

    friend bool operator==(const Witness&, const Witness&) = default;
};

// Covers stem t^i suffix ~ w for all i >= 0: base cases below base_count come
// from the closure, the rest from the shift y t^a -> y t^b carried by the
// witness, where y is the stem without its trailing t's.
struct ShiftSchema {
    int tail = 0;
    BinaryWord stem;
    BinaryWord suffix;
    Witness witness;
    std::int64_t base_count = 0;

    friend bool operator==(const ShiftSchema&, const ShiftSchema&) = default;
};

struct SlopeWitness {
    GroupWord word;
    BinaryWord alpha;

    friend bool operator==(const SlopeWitness&, const SlopeWitness&) = default;
};

struct Certificate {
    Element f;
    Element g;
    PrefixCode tree;
    BinaryWord w;
    std::vector<Witness> witnesses;
    ShiftSchema left;   // family u_1 0^i 1
    ShiftSchema right;  // family u_n 1^i 0
    SlopeWitness slope;
    std::int64_t depth = 0;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Longest word in T, w, witness pairs and schema words, plus 4.
std::int64_t default_depth(const Certificate& c);

enum class Reason {
    Pass,
    InvalidElement,
    Malformed,
    Witness,
    Condition1,
    Condition2,
    Condition3,
    Condition4,
    Slope,
};

std::string_view to_string(Reason reason);
std::optional<Reason> reason_from_string(std::string_view text);

struct Verdict {
    Reason reason = Reason::Pass;
    std::string detail;
    std::int64_t depth = 0;

    bool pass() const { return reason == Reason::Pass; }
};

// Equivalence on words of length <= L generated by seed pairs under
// symmetry, transitivity and u~v => ub~vb (when both sides fit).
class Closure {
public:
    explicit Closure(std::int64_t max_length);

    std::int64_t max_length() const { return max_length_; }

    // Seeds longer than the bound are ignored.
    void add(const BinaryWord& a, const BinaryWord& b);
    bool contains(const BinaryWord& a, const BinaryWord& b);

    // All non-reflexive relations among words of length <= len.
    std::set<Relation> enumerate(std::int64_t len);

private:
    struct Node {
        std::int32_t parent;
        std::int32_t child[2];
        std::int64_t min_length;  // shortest word in the class (valid at roots)
    };

    std::int32_t find(std::int32_t x);
    std::int32_t new_node(std::int64_t min_length);
    std::optional<std::int32_t> node_of(const BinaryWord& word);
    void unite(std::int32_t a, std::int32_t b);
    void lower(std::int32_t root, std::int64_t min_length);

    std::int64_t max_length_;
    std::vector<Node> nodes_;
};

Closure saturate(std::span<const Relation> seeds, std::int64_t max_length);

Assignment assignment_of(const Certificate& c);

bool verify_witness(const Certificate& c, const Witness& wit);

// Shift condition and base cases; the schema witness is verified here too.
bool check_schema(const Certificate& c, const ShiftSchema& s, Closure& closure, std::string* why = nullptr);

bool check_slope(const Certificate& c);

// depth overrides c.depth when given.
Verdict certify_normal_generation(const Certificate& c, std::optional<std::int64_t> depth = std::nullopt);

// Every (u,v) with |u|,|v| <= word_depth realized by a freely reduced word of
// length <= word_len in f^{+-1}, g^{+-1}.
std::set<Relation> brute_force_relations(const Element& f, const Element& g, int word_len, int word_depth);

}  // namespace thompson
