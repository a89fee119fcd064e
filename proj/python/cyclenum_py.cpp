#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cyclenum/array_io.hpp"
#include "cyclenum/bijection.hpp"
#include "cyclenum/boustrophedon.hpp"
#include "cyclenum/density.hpp"
#include "cyclenum/oracle.hpp"

namespace py = pybind11;
using namespace cyclenum;

namespace {

py::int_ to_py(const BigCount& value) { return py::int_(py::str(value.get_str())); }

py::object to_fraction(const BigRatio& value) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(value.get_num()), to_py(value.get_den()));
}

Sign sign_of(const std::string& text) { return parse_sign(text); }

// coefficients keyed by exponent tuples, zero entries omitted
py::dict poly_to_dict(const HomoPoly& poly) {
    py::dict out;
    const auto exps = poly.exponent_list();
    const auto coeffs = poly.coefficients();
    for (std::size_t t = 0; t < exps.size(); ++t) {
        if (coeffs[t] == 0) continue;
        py::tuple key(static_cast<std::size_t>(poly.variables()));
        for (int l = 0; l < poly.variables(); ++l) key[static_cast<std::size_t>(l)] = exps[t][static_cast<std::size_t>(l)];
        out[key] = to_py(coeffs[t]);
    }
    return out;
}

py::list rows_to_list(const std::vector<std::vector<BigCount>>& rows) {
    py::list out;
    for (const auto& row : rows) {
        py::list line;
        for (const auto& v : row) line.append(to_py(v));
        out.append(line);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration of total cyclic orders with prescribed triple orientations";

    m.def("count_p", [](const std::string& w) { return to_py(count_P(SignWord::parse(w))); }, py::arg("word"));
    m.def("count_q", [](const std::string& w, const std::string& eta) { return to_py(count_Q(SignWord::parse(w), sign_of(eta))); },
          py::arg("word"), py::arg("eta"));
    m.def("count_r",
          [](const std::string& w, const std::string& eta1, const std::string& eta2) {
              return to_py(count_R(SignWord::parse(w), sign_of(eta1), sign_of(eta2)));
          },
          py::arg("word"), py::arg("eta1"), py::arg("eta2"));
    m.def("count_r_alpha", [](const std::string& w, int alpha) { return to_py(count_R_alpha(SignWord::parse(w), alpha)); },
          py::arg("word"), py::arg("alpha"));
    m.def("count_descent_class", [](const std::string& w) { return to_py(viennot_counts(SignWord::parse(w))); }, py::arg("word"));

    m.def("triangle",
          [](const std::string& w, const std::string& eta) {
              const auto q = evolve_Q(SignWord::parse(w));
              return rows_to_list(triangle_rows(sign_of(eta) == Sign::Plus ? q.plus : q.minus));
          },
          py::arg("word"), py::arg("eta"), "Rows of T_w^eta, top to bottom");
    m.def("q_coefficients",
          [](const std::string& w, const std::string& eta) {
              const auto q = evolve_Q(SignWord::parse(w));
              return poly_to_dict(sign_of(eta) == Sign::Plus ? q.plus : q.minus);
          },
          py::arg("word"), py::arg("eta"));
    m.def("r_coefficients", [](const std::string& w, int alpha) { return poly_to_dict(evolve_R(SignWord::parse(w)).at(static_cast<std::size_t>(alpha - 1))); },
          py::arg("word"), py::arg("alpha"));
    m.def("array_json",
          [](const std::string& w, const std::string& family, int index) {
              const auto word = SignWord::parse(w);
              if (family == "triangle") {
                  const Sign eta = index > 0 ? Sign::Plus : Sign::Minus;
                  const auto q = evolve_Q(word);
                  return to_json(ArrayDump{word, eta, std::nullopt, eta == Sign::Plus ? q.plus : q.minus}).dump();
              }
              return to_json(ArrayDump{word, std::nullopt, index, evolve_R(word).at(static_cast<std::size_t>(index - 1))}).dump();
          },
          py::arg("word"), py::arg("family"), py::arg("index"),
          "JSON dump; family 'triangle' takes index +1/-1 for eta, 'tetra' takes alpha");

    m.def("entringer_triangle", [](int n) { return rows_to_list(entringer_triangle(n)); }, py::arg("n"));
    m.def("euler_numbers",
          [](int n) {
              py::list out;
              for (const auto& v : euler_numbers(n)) out.append(to_py(v));
              return out;
          },
          py::arg("n"));

    m.def("forward_f", [](const std::vector<int>& cycle) { return forward_F(CyclicOrder::from_sequence(cycle)).images(); },
          py::arg("cycle"), "Cyclic order on [n+1] (as a cycle) to a permutation of [n] in one-line form");
    m.def("inverse_f", [](const std::vector<int>& images) { return inverse_F(Permutation(images)).cycle(); }, py::arg("permutation"));

    m.def("densities",
          [](int n_max) {
              py::list out;
              for (const auto& row : densities(n_max)) {
                  py::list p;
                  for (const auto& v : row.p) p.append(to_fraction(v));
                  py::dict d;
                  d["n"] = row.n;
                  d["total"] = to_py(row.total);
                  d["p"] = p;
                  d["q_plus"] = to_fraction(row.q_plus_density);
                  d["r_plus_plus"] = to_fraction(row.r_plus_plus_density);
                  out.append(d);
              }
              return out;
          },
          py::arg("n_max"), "Exact densities as fractions.Fraction for n = 2..n_max");

    m.def("oracle_counts",
          [](int n) {
              const auto counts = oracle::classify_all(n);
              py::dict out;
              for (const auto& [w, rec] : counts.by_word) {
                  py::dict d;
                  d["p"] = to_py(rec.p);
                  d["q_plus"] = to_py(rec.q_plus);
                  d["q_minus"] = to_py(rec.q_minus);
                  py::list r;
                  for (const auto& v : rec.r) r.append(to_py(v));
                  d["r"] = r;
                  out[py::str(w.str())] = d;
              }
              return out;
          },
          py::arg("n"), "Brute-force class counts over all orders on [n]");
}
