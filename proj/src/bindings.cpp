#include "lexleast/lexleast.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace lexleast;

namespace {

Word to_word(const std::vector<Letter>& letters) { return Word{letters}; }
std::vector<Letter> from_word(const Word& w) { return w.letters(); }

const Morphism& named_morphism(const std::string& name) {
    auto which = builtin_by_name(name);
    if (!which) throw std::invalid_argument("unknown morphism: " + name);
    return builtin(*which);
}

py::dict result_dict(const CheckResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["status"] = std::string(to_string(r.status));
    d["elapsed_ms"] = r.elapsed_ms;
    d["claim"] = r.claim;
    if (r.witness) d["witness"] = *r.witness;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "lexicographically least square-free words over the non-negative integers";

    m.def("parse_word", [](const std::string& text) { return from_word(Word::parse(text)); },
          py::arg("text"), "Parse a digit-string or comma-separated word.");
    m.def("format_word",
          [](const std::vector<Letter>& w, const std::string& format) {
              const Word word = to_word(w);
              if (format == "digits") return to_digits(word);
              if (format == "csv") return to_csv(word);
              return display(word);
          },
          py::arg("word"), py::arg("format") = "auto");

    m.def("slice_word",
          [](const std::vector<Letter>& w, std::optional<std::int64_t> i,
             std::optional<std::int64_t> j) { return from_word(slice(to_word(w), i, j)); },
          py::arg("word"), py::arg("i") = std::nullopt, py::arg("j") = std::nullopt);
    m.def("successor",
          [](const std::vector<Letter>& w) { return from_word(successor(to_word(w))); },
          py::arg("word"));

    m.def("has_square", [](const std::vector<Letter>& w) { return has_square(to_word(w)); },
          py::arg("word"));
    m.def("has_square_suffix",
          [](const std::vector<Letter>& w) { return has_square_suffix(to_word(w)); },
          py::arg("word"));
    m.def("square_endpoints",
          [](const std::vector<Letter>& w) { return square_endpoints(to_word(w)).endpoints; },
          py::arg("word"), "Indexes at which some square ends.");

    m.def("compute_l_prefix",
          [](const std::vector<Letter>& p, std::size_t n) {
              return from_word(compute_L_prefix(to_word(p), n));
          },
          py::arg("prefix"), py::arg("length"),
          "First `length` letters of the lexicographically least square-free extension.");
    m.def("generates",
          [](const std::vector<Letter>& p, const std::vector<Letter>& s) {
              return generates(to_word(p), to_word(s));
          },
          py::arg("p"), py::arg("s"));
    m.def("is_irreducible",
          [](const std::vector<Letter>& w, const std::vector<Letter>& u) {
              return is_irreducible(to_word(w), to_word(u));
          },
          py::arg("w"), py::arg("u"));

    m.def("morphism_image",
          [](const std::string& name, Letter k) {
              return from_word(named_morphism(name).image(k));
          },
          py::arg("name"), py::arg("letter"));
    m.def("morphism_apply",
          [](const std::string& name, const std::vector<Letter>& w) {
              return from_word(apply(named_morphism(name), to_word(w)));
          },
          py::arg("name"), py::arg("word"));
    m.def("ruler_prefix", [](Letter n) { return from_word(ruler_prefix(n)); }, py::arg("n"));
    m.def("ruler_inverse",
          [](const std::vector<Letter>& w) { return from_word(ruler_inverse(to_word(w))); },
          py::arg("word"));

    m.def("p_word", [](int level, Letter n) { return from_word(p_word(level, n)); },
          py::arg("level"), py::arg("n"));
    m.def("t_word", [](Letter n) { return from_word(t_word(n)); }, py::arg("n"));
    m.def("b_word", [](Letter n) { return from_word(b_word(n)); }, py::arg("n"));
    m.def("c_word", [](Letter n) { return from_word(c_word(n)); }, py::arg("n"));
    m.def("y_word", [](Letter n) { return from_word(y_word(n)); }, py::arg("n"));
    m.def("constant",
          [](const std::string& name) {
              auto which = constant_by_name(name);
              if (!which) throw std::invalid_argument("unknown constant: " + name);
              return from_word(constant(*which));
          },
          py::arg("name"));

    m.def("restrictions",
          [](const std::vector<Letter>& w) {
              std::vector<std::vector<Letter>> out;
              for (const Word& r : restrictions(to_word(w)).entries) out.push_back(r.letters());
              return out;
          },
          py::arg("word"));
    m.def("induce_prefix",
          [](const std::vector<Letter>& w) { return from_word(induce_prefix(to_word(w))); },
          py::arg("word"), "A prefix p such that p generates p·w (verified before returning).");
    m.def("decompose_psq",
          [](const std::vector<Letter>& w) {
              const auto d = decompose_psq(to_word(w));
              return py::make_tuple(from_word(d.p), from_word(d.s), from_word(d.q));
          },
          py::arg("word"));
    m.def("sufficient_check",
          [](const std::vector<Letter>& w) {
              const auto r = sufficient_check(to_word(w));
              py::dict d;
              d["p"] = from_word(r.parts.p);
              d["s"] = from_word(r.parts.s);
              d["q"] = from_word(r.parts.q);
              d["compare_length"] = r.compare_length;
              d["lhs"] = from_word(r.lhs);
              d["rhs"] = from_word(r.rhs);
              d["equal"] = r.equal;
              return d;
          },
          py::arg("word"));
    m.def("letter_pair_test", &letter_pair_test, py::arg("n1"), py::arg("n2"), py::arg("depth"));

    m.def("check_ids",
          [](const std::string& filter) { return Harness().ids(filter); },
          py::arg("filter") = "");
    m.def("run_check",
          [](const std::string& id) { return result_dict(Harness().run_check(id)); },
          py::arg("id"));
    m.def("run_checks",
          [](const std::string& filter) {
              py::list out;
              Harness harness;
              for (const auto& r : harness.run_all(filter)) out.append(result_dict(r));
              return out;
          },
          py::arg("filter") = "");
}
