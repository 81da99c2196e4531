#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "soficheck/builtin.hpp"
#include "soficheck/coded.hpp"
#include "soficheck/core.hpp"
#include "soficheck/criteria.hpp"
#include "soficheck/probe.hpp"
#include "soficheck/sofic.hpp"
#include "soficheck/updown.hpp"

namespace py = pybind11;
using namespace soficheck;

namespace {

Word to_word(const std::vector<std::string>& letters) {
    Word w;
    w.letters = letters;
    return w;
}

LabeledGraph graph_from_text(const std::string& text) {
    return essentialize(parse_presentation(text));
}

LabeledGraph named_graph(const std::string& name) {
    if (name == "golden-mean") return builtin::golden_mean();
    if (name == "even-shift") return builtin::even_shift();
    if (name == "full-shift-2") return builtin::full_shift({"0", "1"});
    throw ValidationError("unknown built-in graph: " + name);
}

Side to_side(const std::string& side) {
    if (side == "follower") return Side::follower;
    if (side == "predecessor") return Side::predecessor;
    throw ValidationError("side must be follower or predecessor");
}

probe::ProfileSide to_probe_side(const std::string& side) {
    if (side == "follower") return probe::ProfileSide::follower;
    if (side == "predecessor") return probe::ProfileSide::predecessor;
    if (side == "extender") return probe::ProfileSide::extender;
    throw ValidationError("side must be follower, predecessor or extender");
}

} // namespace

PYBIND11_MODULE(_soficheck, m) {
    m.doc() = "Exact follower/predecessor-set analysis for subshifts";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    m.def("canonical_presentation", [](const std::string& text) {
        return serialize_presentation(graph_from_text(text));
    }, py::arg("text"), "Parse a labeled-graph file and return its canonical form");

    m.def("class_count", [](const std::string& text, std::size_t n, const std::string& side) {
        return class_table(graph_from_text(text), n, to_side(side)).count();
    }, py::arg("text"), py::arg("n"), py::arg("side") = "follower",
       "Number of distinct follower or predecessor classes among length-n words");

    m.def("cumulative_class_count", [](const std::string& text, std::size_t n) {
        return cumulative_follower_count(graph_from_text(text), n);
    }, py::arg("text"), py::arg("n"));

    m.def("automaton_size", [](const std::string& text) {
        return follower_automaton(graph_from_text(text)).size();
    }, py::arg("text"), "Total number of distinct follower classes of the presented shift");

    m.def("builtin_presentation", [](const std::string& name) {
        return serialize_presentation(named_graph(name));
    }, py::arg("name"));

    m.def("language", [](const std::string& text, std::size_t n) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : enumerate_language(graph_oracle(graph_from_text(text)), n)) {
            out.push_back(w.letters);
        }
        return out;
    }, py::arg("text"), py::arg("n"));

    m.def("updown_follower_count", [](std::size_t n) {
        return updown::follower_table(n).count;
    }, py::arg("n"));

    m.def("updown_predecessor_count", [](std::size_t n) {
        return updown::predecessor_table(n).count;
    }, py::arg("n"));

    m.def("updown_terminal_set", [](const std::vector<std::string>& w) {
        return updown::terminal_set(to_word(w)).str();
    }, py::arg("word"));

    m.def("updown_initial_set", [](const std::vector<std::string>& w) {
        return updown::initial_set(to_word(w)).str();
    }, py::arg("word"));

    m.def("updown_closed_form", [](const std::vector<std::string>& v, long long a, long long b) {
        return updown::closed_form(to_word(v), a, b).str();
    }, py::arg("word"), py::arg("lo"), py::arg("hi"));

    m.def("updown_contains", [](const std::vector<std::string>& w) {
        return !updown::terminal_set(to_word(w)).is_empty();
    }, py::arg("word"));

    m.def("sgap_class_count", [](const std::vector<long long>& gaps, std::size_t n,
                                 const std::string& side, std::size_t depth) {
        auto o = coded::oracle(coded::sgap(coded::sgap_from_list(gaps)));
        return probe::classify(o, n, to_probe_side(side), depth).count;
    }, py::arg("gaps"), py::arg("n"), py::arg("side") = "follower", py::arg("depth") = 4,
       "Depth-limited lower bound on the class count of an S-gap shift");

    m.def("criteria_report", [](const std::string& text, std::size_t max_n) {
        auto g = graph_from_text(text);
        auto view = criteria::view_from_graph(g, max_n, "graph");
        auto o = graph_oracle(g);
        std::vector<std::string> out;
        for (std::size_t n = 1; n <= max_n; ++n) {
            out.push_back(criteria::check_unions(view, n).to_json().dump());
            out.push_back(criteria::check_cumulative(view, n).to_json().dump());
        }
        out.push_back(criteria::word_complexity_check(o, max_n).to_json().dump());
        return out;
    }, py::arg("text"), py::arg("max_n"),
       "Soficity-criteria reports as JSON strings, one per checker and length");
}
