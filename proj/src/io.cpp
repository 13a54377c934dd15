#include "thompson/io.hpp"

#include <functional>
#include <sstream>

#include "thompson/error.hpp"

namespace thompson {

namespace {

std::string_view trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

BinaryWord word_at(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw Error(ErrorKind::Parse, std::string("missing word field '") + key + "'");
    }
    return BinaryWord::parse(j.at(key).get<std::string>());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
    return j.at(key);
}

Json witness_to_json(const Witness& w) {
    return Json{{"word", w.word.to_string()}, {"from", w.from.to_string()}, {"to", w.to.to_string()}};
}

Witness witness_from_json(const Json& j) {
    const Json& word = field(j, "word");
    if (!word.is_string()) throw Error(ErrorKind::Parse, "witness word must be a string");
    return {GroupWord::parse(word.get<std::string>()), word_at(j, "from"), word_at(j, "to")};
}

Json schema_to_json(const ShiftSchema& s) {
    return Json{{"tail", s.tail},
                {"stem", s.stem.to_string()},
                {"suffix", s.suffix.to_string()},
                {"witness", witness_to_json(s.witness)},
                {"base_count", s.base_count}};
}

ShiftSchema schema_from_json(const Json& j) {
    const Json& tail = field(j, "tail");
    const Json& base = field(j, "base_count");
    if (!tail.is_number_integer() || !base.is_number_integer()) {
        throw Error(ErrorKind::Parse, "schema tail and base_count must be integers");
    }
    return {tail.get<int>(), word_at(j, "stem"), word_at(j, "suffix"), witness_from_json(field(j, "witness")),
            base.get<std::int64_t>()};
}

}  // namespace

Element parse_element_text(std::string_view text) {
    std::vector<BranchPair> pairs;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'u -> v'");
        }
        pairs.push_back({BinaryWord::parse(trim(line.substr(0, arrow))), BinaryWord::parse(trim(line.substr(arrow + 2)))});
    }
    if (pairs.empty()) throw Error(ErrorKind::Parse, "no branch pairs");
    return Element::from_branch_pairs(pairs);
}

std::string format_element_text(const Element& f) {
    std::string out;
    for (const auto& p : f.pairs()) out += p.domain.to_string() + " -> " + p.range.to_string() + "\n";
    return out;
}

Json element_to_json(const Element& f) {
    Json out = Json::array();
    for (const auto& p : f.pairs()) out.push_back(Json::array({p.domain.to_string(), p.range.to_string()}));
    return out;
}

Element element_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, "element must be a non-empty list of pairs");
    std::vector<BranchPair> pairs;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
            throw Error(ErrorKind::Parse, "branch pair must be [\"u\", \"v\"]");
        }
        pairs.push_back({BinaryWord::parse(p[0].get<std::string>()), BinaryWord::parse(p[1].get<std::string>())});
    }
    return Element::from_branch_pairs(pairs);
}

Json certificate_to_json(const Certificate& c) {
    Json tree = Json::array();
    for (const auto& u : c.tree.branches()) tree.push_back(u.to_string());
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(witness_to_json(w));
    return Json{{"f", element_to_json(c.f)},
                {"g", element_to_json(c.g)},
                {"tree", tree},
                {"w", c.w.to_string()},
                {"witnesses", witnesses},
                {"left_schema", schema_to_json(c.left)},
                {"right_schema", schema_to_json(c.right)},
                {"slope", Json{{"word", c.slope.word.to_string()}, {"alpha", c.slope.alpha.to_string()}}},
                {"depth", c.depth}};
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "certificate must be an object");
    Certificate c;
    c.f = element_from_json(field(j, "f"));
    c.g = element_from_json(field(j, "g"));

    const Json& tree = field(j, "tree");
    if (!tree.is_array()) throw Error(ErrorKind::Parse, "tree must be a list of words");
    std::vector<BinaryWord> branches;
    for (const auto& u : tree) {
        if (!u.is_string()) throw Error(ErrorKind::Parse, "tree must be a list of words");
        branches.push_back(BinaryWord::parse(u.get<std::string>()));
    }
    c.tree = PrefixCode(std::move(branches));
    c.w = word_at(j, "w");

    const Json& witnesses = field(j, "witnesses");
    if (!witnesses.is_array()) throw Error(ErrorKind::Parse, "witnesses must be a list");
    for (const auto& w : witnesses) c.witnesses.push_back(witness_from_json(w));
    c.left = schema_from_json(field(j, "left_schema"));
    c.right = schema_from_json(field(j, "right_schema"));

    const Json& slope = field(j, "slope");
    const Json& word = field(slope, "word");
    if (!word.is_string()) throw Error(ErrorKind::Parse, "slope word must be a string");
    c.slope = {GroupWord::parse(word.get<std::string>()), word_at(slope, "alpha")};

    const Json& depth = field(j, "depth");
    if (!depth.is_number_integer()) throw Error(ErrorKind::Parse, "depth must be an integer");
    c.depth = depth.get<std::int64_t>();
    return c;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

std::string element_to_dot(const Element& f, std::string_view name) {
    std::ostringstream out;
    const TreeDiagram d = f.diagram();
    out << "digraph " << name << " {\n";
    out << "  node [shape=point];\n";
    auto emit = [&](const PrefixCode& code, const char* tag, const char* label) {
        out << "  subgraph cluster_" << tag << " {\n";
        out << "    label=\"" << label << "\";\n";
        // Internal nodes are the strict prefixes of the leaves.
        std::vector<BinaryWord> internal;
        std::function<void(const BinaryWord&)> walk = [&](const BinaryWord& node) {
            if (code.contains(node)) return;
            internal.push_back(node);
            walk(node.child(0));
            walk(node.child(1));
        };
        walk(BinaryWord{});
        for (std::size_t i = 0; i < code.size(); ++i) {
            out << "    " << tag << "_" << code[i].to_string() << " [shape=plaintext, label=\"" << i + 1 << "\"];\n";
        }
        for (const auto& node : internal) {
            for (int bit = 0; bit < 2; ++bit) {
                out << "    " << tag << "_" << node.to_string() << " -> " << tag << "_" << node.child(bit).to_string()
                    << ";\n";
            }
        }
        out << "  }\n";
    };
    emit(d.domain(), "domain", "T+");
    emit(d.range(), "range", "T-");
    out << "}\n";
    return out.str();
}

}  // namespace thompson
