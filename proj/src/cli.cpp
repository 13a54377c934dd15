#include "thompson/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "thompson/corpus.hpp"
#include "thompson/error.hpp"
#include "thompson/io.hpp"
#include "thompson/synthesis.hpp"

namespace thompson::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text;
}

// Built-in name, element file (text or JSON) or a word in x0, x1.
Element load_element(const std::string& arg) {
    if (arg == "x0") return Element::x0();
    if (arg == "x1") return Element::x1();
    if (arg == "id") return Element::identity();
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        const std::string text = read_file(arg);
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '[') return element_from_json(parse_json(text));
        return parse_element_text(text);
    }
    const Assignment gens{{"x0", Element::x0()}, {"x1", Element::x1()}};
    return eval_word(GroupWord::parse(arg), gens);
}

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t lo, std::size_t hi, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw CLI::ValidationError(what, "expected integers, got '" + text + "'");
        out.push_back(v);
    }
    if (out.size() < lo || out.size() > hi) throw CLI::ValidationError(what, "wrong number of integers in '" + text + "'");
    return out;
}

std::string element_output(const Element& f, bool json) {
    return json ? dump_json(element_to_json(f)) : format_element_text(f);
}

Json verdict_to_json(const Verdict& v) {
    return Json{{"result", v.pass() ? "PASS" : "FAIL"},
                {"reason", std::string(to_string(v.reason))},
                {"depth", v.depth},
                {"detail", v.detail}};
}

Json result_to_json(const SynthesisResult& r, const Verdict& v) {
    const auto& k = r.construction;
    Json out{{"f", element_to_json(r.f)},
             {"g", element_to_json(r.g)},
             {"image", Json::array({r.target_image.at_zero, r.target_image.at_one})},
             {"part", k.part},
             {"inverted", k.inverted},
             {"index", r.index.to_string()}};
    if (r.form) out["form"] = Json::array({r.form->p, r.form->q});
    out["verdict"] = verdict_to_json(v);
    out["certificate"] = certificate_to_json(r.certificate);
    return out;
}

struct SynthesisFlags {
    std::string out_path;
    std::string cert_path;
    bool json = false;
};

int report_synthesis(const SynthesisResult& r, const SynthesisFlags& flags, std::ostream& out) {
    const Verdict v = certify_normal_generation(r.certificate);
    if (!flags.out_path.empty()) write_file(flags.out_path, format_element_text(r.g));
    if (!flags.cert_path.empty()) write_file(flags.cert_path, dump_json(certificate_to_json(r.certificate)));
    if (flags.json) {
        out << dump_json(result_to_json(r, v));
    } else {
        out << "# part " << r.construction.part << (r.construction.inverted ? " (inverted)" : "") << "\n";
        out << "# image " << abelianize(r.g).to_string() << "\n";
        out << "# index " << r.index.to_string();
        if (r.form) out << " = " << r.form->p << " x " << r.form->q;
        out << "\n";
        out << "# certificate " << (v.pass() ? "PASS" : "FAIL " + std::string(to_string(v.reason))) << "\n";
        if (flags.out_path.empty()) out << format_element_text(r.g);
    }
    return v.pass() ? 0 : 1;
}

int certify_file(const std::string& path, std::optional<std::int64_t> depth, bool json, std::ostream& out) {
    Verdict v;
    try {
        const Certificate c = certificate_from_json(parse_json(read_file(path)));
        v = certify_normal_generation(c, depth);
    } catch (const Error& e) {
        // Anything that stops the record from describing two elements.
        v.reason = Reason::InvalidElement;
        v.detail = e.what();
        v.depth = depth.value_or(0);
    }
    if (json) {
        out << dump_json(verdict_to_json(v));
    } else if (v.pass()) {
        out << "PASS\n";
    } else {
        out << "FAIL " << to_string(v.reason) << "\n";
        out << "# depth " << v.depth << "\n";
        if (!v.detail.empty()) out << "# " << v.detail << "\n";
    }
    return v.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in Thompson's group F", "thompson"};
    app.require_subcommand(1);

    std::string a_arg, b_arg, point, ints;
    bool json = false;
    SynthesisFlags sflags;
    std::string target;
    std::optional<std::int64_t> depth;
    std::uint64_t seed = 0;
    std::size_t count = 50;
    bool dot = false;

    auto element_arg = [&](CLI::App* sub) {
        sub->add_option("element", a_arg, "x0, x1, id, an element file, or a word in x0, x1 (also --word W)")
            ->required();
    };

    auto* parse = app.add_subcommand("parse", "Print an element in canonical form");
    element_arg(parse);
    parse->add_flag("--json", json);

    auto* comp = app.add_subcommand("compose", "Product a*b, applying a first");
    comp->add_option("a", a_arg)->required();
    comp->add_option("b", b_arg)->required();
    comp->add_flag("--json", json);

    auto* inv = app.add_subcommand("invert", "Inverse element");
    element_arg(inv);
    inv->add_flag("--json", json);

    auto* ev = app.add_subcommand("eval", "Image of a dyadic point");
    element_arg(ev);
    ev->add_option("t", point, "dyadic rational such as 3/8 or .011")->required();

    auto* sl = app.add_subcommand("slopes", "Log2 slopes left and right of a point");
    element_arg(sl);
    sl->add_option("t", point)->required();

    auto* ab = app.add_subcommand("abelianize", "Log2 slopes at 0 and at 1");
    element_arg(ab);

    auto* fl = app.add_subcommand("flip", "Conjugate by t -> 1 - t");
    element_arg(fl);
    fl->add_flag("--json", json);

    auto* uvw = app.add_subcommand("uvw", "Print the triple u, v, w found for an element");
    element_arg(uvw);
    uvw->add_flag("--json", json);

    auto* lat = app.add_subcommand("lattice", "Index of <(a,b),(c,d)>, or the companion of (a,b)");
    lat->add_option("vectors", ints, "a,b or a,b,c,d")->required();

    auto* syn = app.add_subcommand("synthesize", "Partner g with abelian image (c,d)");
    element_arg(syn);
    syn->add_option("--target", target, "c,d")->required();

    auto* cp = app.add_subcommand("complete-pair", "Partner g with <f,g> = F");
    auto* fi = app.add_subcommand("finite-index", "Partner g with <f,g> of index gcd of the image of f");
    for (auto* sub : {syn, cp, fi}) {
        if (sub != syn) element_arg(sub);
        sub->add_option("--out", sflags.out_path, "write g here as text");
        sub->add_option("--cert", sflags.cert_path, "write the certificate here as JSON");
        sub->add_flag("--json", sflags.json);
    }

    auto* cert = app.add_subcommand("certify", "Check a certificate file");
    cert->add_option("certificate", a_arg, "certificate JSON")->required();
    cert->add_option("--depth", depth, "closure length bound");
    cert->add_flag("--json", json);

    auto* ex = app.add_subcommand("export", "Render the two trees of an element");
    element_arg(ex);
    ex->add_flag("--dot", dot, "Graphviz DOT (the only format)");

    auto* corp = app.add_subcommand("corpus", "Seeded end-to-end synthesis sweep");
    corp->add_option("--seed", seed);
    corp->add_option("--count", count);
    corp->add_option("--out", sflags.out_path, "directory for per-case certificates");

    // `--word W` is the positional element W.
    std::vector<std::string> reversed;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--word" && i + 1 < args.size()) {
            reversed.push_back(args[++i]);
        } else if (args[i].rfind("--word=", 0) == 0) {
            reversed.push_back(args[i].substr(7));
        } else {
            reversed.push_back(args[i]);
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    auto element = [&] { return load_element(a_arg); };

    try {
        if (sub == parse) {
            out << element_output(element(), json);
        } else if (sub == comp) {
            out << element_output(load_element(a_arg) * load_element(b_arg), json);
        } else if (sub == inv) {
            out << element_output(invert(element()), json);
        } else if (sub == ev) {
            out << evaluate(element(), DyadicRational::parse(point)).to_string() << "\n";
        } else if (sub == sl) {
            const Element f = element();
            const DyadicRational t = DyadicRational::parse(point);
            const DyadicRational zero = DyadicRational::parse("0"), one = DyadicRational::parse("1");
            out << "left " << (t == zero ? std::string("-") : std::to_string(slope_left(f, t)));
            out << " right " << (t == one ? std::string("-") : std::to_string(slope_right(f, t))) << "\n";
        } else if (sub == ab) {
            out << abelianize(element()).to_string() << "\n";
        } else if (sub == fl) {
            out << element_output(flip(element()), json);
        } else if (sub == uvw) {
            const UVWTriple t = find_uvw(element());
            if (json) {
                out << dump_json(Json{{"sign", t.sign}, {"u", t.u.to_string()}, {"v", t.v.to_string()},
                                      {"w", t.w.to_string()}});
            } else {
                out << "sign " << t.sign << "\nu " << t.u.to_string() << "\nv " << t.v.to_string() << "\nw "
                    << t.w.to_string() << "\n";
            }
        } else if (sub == lat) {
            const auto v = parse_ints(ints, 2, 4, "vectors");
            if (v.size() == 3) throw CLI::ValidationError("vectors", "expected a,b or a,b,c,d");
            if (v.size() == 4) {
                out << "index " << index_of({{v[0], v[1]}, {v[2], v[3]}}).to_string() << "\n";
            } else {
                const Companion c = companion_rectangular(v[0], v[1]);
                out << "companion (" << c.cd.x << "," << c.cd.y << ")\n";
                out << "form p=" << c.form.p << " q=" << c.form.q << "\n";
                out << "index " << index_of({{v[0], v[1]}, c.cd}).to_string() << "\n";
            }
        } else if (sub == syn) {
            const auto t = parse_ints(target, 2, 2, "--target");
            return report_synthesis(synthesize(element(), t[0], t[1]), sflags, out);
        } else if (sub == cp) {
            return report_synthesis(complete_generating_pair(element()), sflags, out);
        } else if (sub == fi) {
            return report_synthesis(finite_index_pair(element()), sflags, out);
        } else if (sub == cert) {
            return certify_file(a_arg, depth, json, out);
        } else if (sub == ex) {
            out << element_to_dot(element(), "element");
        } else if (sub == corp) {
            const CorpusReport report = run_corpus(seed, count);
            out << format_corpus(report);
            if (!sflags.out_path.empty()) {
                std::filesystem::create_directories(sflags.out_path);
                for (const auto& cc : report.cases) {
                    if (!cc.result) continue;
                    write_file((std::filesystem::path(sflags.out_path) / ("case_" + std::to_string(cc.index) + ".json"))
                                   .string(),
                               dump_json(certificate_to_json(cc.result->certificate)));
                }
            }
            return report.passed() == report.cases.size() ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        err << "usage: " << e.what() << "\n" << sub->help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace thompson::cli
