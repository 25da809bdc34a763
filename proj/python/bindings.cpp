#include "leftorder/abelian.hpp"
#include "leftorder/corpus.hpp"
#include "leftorder/documents.hpp"
#include "leftorder/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace leftorder;

namespace {

using GermSpec = std::tuple<std::string, std::string, std::string>;  // name, expr, rho

std::vector<ParamGerm> make_germs(const std::vector<GermSpec>& specs) {
    std::vector<ParamGerm> out;
    for (const auto& [name, expr, rho] : specs) out.push_back(make_germ(name, expr, parse_rational(rho)));
    return out;
}

py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Left orders, dynamical realizations and germ orders with exact arithmetic";

    static py::exception<Error> base(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

    m.def("first_betti", [](const std::string& text) { return first_betti(parse_presentation(text)); },
          py::arg("presentation"));
    m.def("smith_diagonal", [](const std::string& text) {
        py::list out;
        for (const Integer& d : abelian_invariants(parse_presentation(text)).smith_diagonal) out.append(to_py(d));
        return out;
    }, py::arg("presentation"));
    m.def("normalize", [](const std::string& text) { return serialize(parse_presentation(text)); },
          py::arg("presentation"));
    m.def("identity_status",
          [](const std::string& text, const std::string& word, std::size_t max_word_length, std::size_t max_nodes) {
              const Presentation p = parse_presentation(text);
              return std::string(to_string(identity_status(p, parse_word(word, p), {max_word_length, max_nodes}).verdict));
          },
          py::arg("presentation"), py::arg("word"), py::arg("max_word_length") = 32, py::arg("max_nodes") = 4000);
    m.def("check_lo",
          [](const std::string& text, const std::vector<std::string>& subset, std::size_t max_len,
             std::size_t max_word_length, std::size_t max_nodes, unsigned threads) {
              const Presentation p = parse_presentation(text);
              std::vector<Word> words;
              for (const auto& w : subset) words.push_back(parse_word(w, p));
              py::gil_scoped_release release;
              return to_document(semigroup_criterion(p, words, max_len, {max_word_length, max_nodes}, threads));
          },
          py::arg("presentation"), py::arg("subset"), py::arg("max_len"), py::arg("max_word_length") = 32,
          py::arg("max_nodes") = 4000, py::arg("threads") = 1);
    m.def("realize",
          [](const std::string& text, const std::string& order, std::size_t radius, std::size_t iterates,
             std::size_t map_radius) {
              const Presentation p = parse_presentation(text);
              py::gil_scoped_release release;
              return to_document(realize(p, order, radius, iterates, map_radius, Budget{}));
          },
          py::arg("presentation"), py::arg("order"), py::arg("radius"), py::arg("iterates"), py::arg("map_radius") = 2);
    m.def("germ_order",
          [](const std::vector<GermSpec>& germs, std::size_t depth, std::size_t max_len) {
              return to_document(select_signs(make_germs(germs), depth, max_len));
          },
          py::arg("germs"), py::arg("depth"), py::arg("max_len"));
    m.def("obstruct",
          [](const std::string& text, const std::vector<GermSpec>& germs, std::size_t depth) {
              return to_document(stability_obstruction(parse_presentation(text), make_germs(germs), depth));
          },
          py::arg("presentation"), py::arg("germs"), py::arg("depth"));
    m.def("eval_germ",
          [](const std::string& expr, const std::string& rho, const std::string& x, const std::string& s) {
              return to_string(eval_param_germ(make_germ("f", expr, parse_rational(rho)), parse_rational(x),
                                               parse_rational(s)));
          },
          py::arg("expr"), py::arg("rho"), py::arg("x"), py::arg("s"));
    m.def("verify", [](const std::string& document) {
        const VerifyOutcome v = verify_document(document);
        return std::make_tuple(v.ok, v.kind, v.message);
    }, py::arg("document"));
    m.def("corpus", [] {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const CorpusEntry& e : corpus()) out.emplace_back(e.name, e.text, e.notes);
        return out;
    });
}
