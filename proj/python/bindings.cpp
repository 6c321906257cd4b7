#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "formhasse/arithgroups.hpp"
#include "formhasse/cli.hpp"
#include "formhasse/json_io.hpp"
#include "formhasse/witness.hpp"

#include <sstream>

namespace py = pybind11;
using namespace formhasse;

namespace {

std::vector<std::string> ramification(Field field, const DiagForm& d) {
  std::vector<std::string> out;
  if (field == Field::Q) {
    for (const auto& v : hasse_Q(d).places) out.push_back(to_string(v));
  } else {
    for (const auto& v : hasse_K5(d).places) out.push_back(to_string(v));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_formhasse, m) {
  m.doc() = "Exact quadratic form invariants over Q and Q(sqrt5)";
  py::register_exception<Error>(m, "FormhasseError", PyExc_ValueError);

  m.def("equivalent", [](const std::string& field, const std::string& lhs, const std::string& rhs) {
    const Field f = parse_field(field);
    const DiagForm a = parse_diag(lhs, f), b = parse_diag(rhs, f);
    const Comparison c = compare_forms(a.to_form(), b.to_form());
    return py::make_tuple(c.equivalent, c.differing);
  }, py::arg("field"), py::arg("lhs"), py::arg("rhs"));

  m.def("hasse", [](const std::string& field, const std::string& form) {
    const Field f = parse_field(field);
    const DiagForm d = parse_diag(form, f);
    py::dict out;
    out["det_class"] = to_string(det_class(d));
    const Signature s = signature_at(d, Embedding::Identity);
    out["signature"] = py::make_tuple(s.plus, s.minus);
    if (f == Field::K5) {
      const Signature t = signature_at(d, Embedding::Tau);
      out["signature_tau"] = py::make_tuple(t.plus, t.minus);
    }
    out["ramification"] = ramification(f, d);
    return out;
  }, py::arg("field"), py::arg("form"));

  m.def("hilbert_q", [](const std::string& a, const std::string& b, long place) {
    const K5Elem x = parse_k5(a), y = parse_k5(b);
    if (!x.is_rational() || !y.is_rational()) throw Error("hilbert_q: arguments must be rational");
    return hilbert_Q(x.a(), y.a(), place == 0 ? PlaceQ::real() : PlaceQ::finite(place));
  }, py::arg("a"), py::arg("b"), py::arg("place") = 0);

  m.def("three_squares_representable", [](long d) { return three_squares_representable(d); });
  m.def("in_prime_set_P", [](long q) { return in_prime_set_P(q); });
  m.def("prime_set_P", [](long limit) {
    std::vector<std::pair<long, std::string>> out;
    for (const auto& e : prime_set_P_entries(limit)) out.emplace_back(e.q.get_si(), to_string(e.prime.pi));
    return out;
  }, py::arg("limit"));

  m.def("classify", [](const std::string& form) {
    const KleinianClass k = classify_kleinian(parse_diag(form, Field::Q));
    py::dict out;
    out["field_disc"] = k.field_disc.get_si();
    out["symbol"] = py::make_tuple(k.symbol.first.get_str(), k.symbol.second.get_str());
    out["cocompact"] = k.cocompact;
    return out;
  });

  m.def("find_witness", [](const std::string& lhs, const std::string& rhs, long bound) -> py::object {
    const auto w = find_witness(parse_diag(lhs, Field::Q), parse_diag(rhs, Field::Q), bound);
    if (!w) return py::none();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < w->matrix().rows(); ++i) {
      rows.emplace_back();
      for (std::size_t j = 0; j < w->matrix().cols(); ++j) rows.back().push_back(to_string(w->matrix()(i, j)));
    }
    return py::cast(rows);
  }, py::arg("lhs"), py::arg("rhs"), py::arg("bound") = 12);

  m.def("verify_paper", [](const std::string& section, long dmax) {
    VerifyOptions o;
    o.dmax = dmax;
    return jsonio::report_to_json(verify_paper(section, o)).dump();
  }, py::arg("section"), py::arg("dmax") = 300);

  m.def("sections", [] { return paper_sections(); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
