#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "gvtools/errors.hpp"
#include "gvtools/fano.hpp"
#include "gvtools/gv.hpp"
#include "gvtools/io.hpp"
#include "gvtools/kernels.hpp"
#include "gvtools/localcurves.hpp"
#include "gvtools/structure.hpp"

namespace py = pybind11;
using namespace gvt;

// Rationals cross the boundary as "p/q" strings; the Python package turns
// them into fractions.Fraction.
namespace {

Rational rational(const std::string& s) {
  Rational r;
  if (!parse_rational(s, r)) throw ConfigError("not a rational: '" + s + "'");
  return r;
}

std::map<int, std::string> to_strings(const std::map<int, Rational>& m) {
  std::map<int, std::string> out;
  for (const auto& [k, v] : m) out.emplace(k, to_string(v));
  return out;
}

std::map<int, Rational> from_strings(const std::map<int, std::string>& m) {
  std::map<int, Rational> out;
  for (const auto& [k, v] : m) out.emplace(k, rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Gopakumar-Vafa transforms over rational t-series";

  auto base = py::register_exception<Error>(m, "GVError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ValidityExhausted>(m, "ValidityExhausted", base.ptr());
  py::register_exception<StrictIntegrality>(m, "StrictIntegrality", base.ptr());
  py::register_exception<NotSuperRigidShape>(m, "NotSuperRigidShape", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  // Whole-file operations on the text format.
  m.def("gw_from_bps", [](const std::string& text) { return print(GVFile{gw_from_bps(parse_as<BPSTable>(text))}); },
        py::arg("text"));
  m.def(
      "bps_from_gw",
      [](const std::string& text, bool strict) {
        return print(GVFile{bps_from_gw(parse_as<QSeries>(text), InversionOptions{strict})});
      },
      py::arg("text"), py::arg("strict") = false);
  m.def(
      "extract_e",
      [](const std::string& text, bool strict) {
        ETable e = extract_e(parse_as<QSeries>(text));
        if (strict && !e.integrality_ok) throw StrictIntegrality("non-integral structure coefficient");
        return print(GVFile{e});
      },
      py::arg("text"), py::arg("strict") = false);
  m.def("series_from_e", [](const std::string& text) { return print(GVFile{series_from_e(parse_as<ETable>(text))}); },
        py::arg("text"));
  m.def("g_series", [](int h, int d_max, int t_order) { return print(GVFile{g_series(h, d_max, t_order)}); },
        py::arg("h"), py::arg("d_max"), py::arg("t_order"));
  m.def("canonicalize", [](const std::string& text) { return print(parse(text)); }, py::arg("text"));

  // Value-level helpers.
  m.def(
      "local_bps",
      [](int h, int d_max, int t_order) {
        LocalBPS b = local_bps(h, d_max, t_order);
        std::map<std::tuple<int, int>, std::string> out;
        for (const auto& [key, v] : b.table.entries) out.emplace(std::tuple{int(key.first[0]), key.second}, to_string(v));
        std::map<int, int> windows, cutoffs;
        for (const auto& [a, w] : b.table.genus_windows) windows.emplace(int(a[0]), w);
        for (const auto& [a, c] : b.table.observed_genus_cutoffs) cutoffs.emplace(int(a[0]), c);
        return py::make_tuple(out, windows, cutoffs, b.table.integrality_ok);
      },
      py::arg("h"), py::arg("d_max"), py::arg("t_order"));
  m.def(
      "sin_kernel", [](long k, int g, int order) { return to_strings(sin_kernel(k, g, order).coeffs()); },
      py::arg("k"), py::arg("g"), py::arg("order"));
  m.def(
      "fano_bps_from_gw",
      [](int c1, const std::map<int, std::string>& gw, int window) {
        return to_strings(fano_bps_from_gw(FanoSeries{c1, from_strings(gw), window}));
      },
      py::arg("c1"), py::arg("gw"), py::arg("window"));
  m.def(
      "fano_gw_from_bps",
      [](int c1, const std::map<int, std::string>& bps, int t_order) {
        FanoSeries f = fano_gw_from_bps(c1, from_strings(bps), t_order);
        return py::make_tuple(to_strings(f.gw_coeffs), f.window);
      },
      py::arg("c1"), py::arg("bps"), py::arg("t_order"));
}
