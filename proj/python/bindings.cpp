#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "thompson/cli.hpp"
#include "thompson/corpus.hpp"
#include "thompson/error.hpp"
#include "thompson/io.hpp"
#include "thompson/synthesis.hpp"

namespace py = pybind11;
using namespace thompson;

namespace {

using PairList = std::vector<std::pair<std::string, std::string>>;

Element from_pairs(const PairList& pairs) {
    std::vector<BranchPair> out;
    for (const auto& [u, v] : pairs) out.push_back({BinaryWord::parse(u), BinaryWord::parse(v)});
    return Element::from_branch_pairs(out);
}

PairList to_pairs(const Element& f) {
    PairList out;
    for (const auto& p : f.pairs()) out.emplace_back(p.domain.to_string(), p.range.to_string());
    return out;
}

Element from_word(const std::string& word) {
    const Assignment gens{{"x0", Element::x0()}, {"x1", Element::x1()}};
    return eval_word(GroupWord::parse(word), gens);
}

py::tuple image(const AbelianImage& a) { return py::make_tuple(a.at_zero, a.at_one); }

py::object index_value(const Index& i) { return i.value ? py::object(py::int_(*i.value)) : py::object(py::none()); }

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["passed"] = v.pass();
    d["reason"] = std::string(to_string(v.reason));
    d["detail"] = v.detail;
    d["depth"] = v.depth;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations in Thompson's group F";

    static py::exception<Error> thompson_error(m, "ThompsonError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(thompson_error, e.what());
        }
    });

    py::class_<Element>(m, "Element")
        .def(py::init<>())
        .def(py::init(&from_pairs), py::arg("pairs"), "Element from branch pairs [(u, v), ...]")
        .def_static("x0", &Element::x0)
        .def_static("x1", &Element::x1)
        .def_static("identity", &Element::identity)
        .def_static("from_word", &from_word, py::arg("word"), "Product of a word in x0, x1")
        .def_static("from_text", &parse_element_text, py::arg("text"))
        .def_static("from_json", [](const std::string& text) { return element_from_json(parse_json(text)); })
        .def_property_readonly("pairs", &to_pairs)
        .def("__len__", &Element::size)
        .def("is_identity", &Element::is_identity)
        .def("__mul__", &compose, "Product applying self first")
        .def("__pow__", [](const Element& f, std::int64_t k) { return power(f, k); })
        .def("inverse", &invert)
        .def("flip", &flip)
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__hash__", [](const Element& f) { return std::hash<std::string>{}(format_element_text(f)); })
        .def("__call__",
             [](const Element& f, const std::string& t) { return evaluate(f, DyadicRational::parse(t)).to_string(); },
             py::arg("t"), "Image of a dyadic point given as text, e.g. '3/8'")
        .def("slopes",
             [](const Element& f, const std::string& t) {
                 const DyadicRational q = DyadicRational::parse(t);
                 py::object left = py::none(), right = py::none();
                 if (q != DyadicRational::zero()) left = py::int_(slope_left(f, q));
                 if (q != DyadicRational::one()) right = py::int_(slope_right(f, q));
                 return py::make_tuple(left, right);
             })
        .def("abelianize", [](const Element& f) { return image(abelianize(f)); })
        .def("in_derived", &in_derived)
        .def("to_text", &format_element_text)
        .def("to_json", [](const Element& f) { return dump_json(element_to_json(f)); })
        .def("to_dot", &element_to_dot, py::arg("name") = "element")
        .def("__repr__", [](const Element& f) {
            std::string out = "Element([";
            for (const auto& [u, v] : to_pairs(f)) out += "('" + u + "', '" + v + "'), ";
            if (f.size() > 0) out.resize(out.size() - 2);
            return out + "])";
        });

    m.def("find_uvw", [](const Element& f) {
        const UVWTriple t = find_uvw(f);
        return py::make_tuple(t.sign, t.u.to_string(), t.v.to_string(), t.w.to_string());
    });

    m.def("companion", [](std::int64_t a, std::int64_t b) {
        const Companion c = companion_rectangular(a, b);
        return py::make_tuple(py::make_tuple(c.cd.x, c.cd.y), py::make_tuple(c.form.p, c.form.q));
    });
    m.def("complete_basis", [](std::int64_t a, std::int64_t b) {
        const Vec2 v = complete_basis(a, b);
        return py::make_tuple(v.x, v.y);
    });
    m.def("lattice_index", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        return index_value(index_of({{a, b}, {c, d}}));
    }, "Index of <(a,b),(c,d)> in Z^2, None when infinite");

    py::class_<SynthesisResult>(m, "SynthesisResult")
        .def_readonly("f", &SynthesisResult::f)
        .def_readonly("g", &SynthesisResult::g)
        .def_property_readonly("part", [](const SynthesisResult& r) { return r.construction.part; })
        .def_property_readonly("inverted", [](const SynthesisResult& r) { return r.construction.inverted; })
        .def_property_readonly("index", [](const SynthesisResult& r) { return index_value(r.index); })
        .def_property_readonly("target", [](const SynthesisResult& r) { return image(r.target_image); })
        .def_property_readonly("certificate",
                               [](const SynthesisResult& r) { return dump_json(certificate_to_json(r.certificate)); })
        .def("certify", [](const SynthesisResult& r) { return verdict_dict(certify_normal_generation(r.certificate)); });

    m.def("synthesize", &synthesize, py::arg("f"), py::arg("c"), py::arg("d"));
    m.def("complete_generating_pair", &complete_generating_pair, py::arg("f"));
    m.def("finite_index_pair", &finite_index_pair, py::arg("f"));

    m.def(
        "certify",
        [](const std::string& text, std::optional<std::int64_t> depth) {
            return verdict_dict(certify_normal_generation(certificate_from_json(parse_json(text)), depth));
        },
        py::arg("certificate"), py::arg("depth") = py::none(), "Check a certificate given as JSON text");

    m.def(
        "corpus",
        [](std::uint64_t seed, std::size_t count) {
            const CorpusReport r = run_corpus(seed, count);
            return py::make_tuple(r.passed(), format_corpus(r));
        },
        py::arg("seed") = 0, py::arg("count") = 50);

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
    }, "Run the command-line front end; returns (status, stdout, stderr)");
}
