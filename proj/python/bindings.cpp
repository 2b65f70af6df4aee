#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "qlink/aw.hpp"
#include "qlink/braid.hpp"
#include "qlink/cli.hpp"
#include "qlink/errors.hpp"
#include "qlink/invariant.hpp"
#include "qlink/rmatrix.hpp"
#include "qlink/serialize.hpp"

namespace py = pybind11;
using namespace qlink;
using nlohmann::json;

namespace {

braid::ColoredBraid load(const std::string& text, const std::optional<std::vector<std::string>>& colors) {
  braid::ColoredBraid b = braid::parse_colored(text);
  if (!colors) return b;
  std::vector<Spin> spins;
  for (const auto& c : *colors) spins.push_back(Spin::parse(c));
  return braid::ColoredBraid(b.word, std::move(spins));
}

std::string poly_doc(const LaurentPoly& p, const std::string& var) {
  return json{{"variable", var}, {"text", p.to_string(var)}, {"value", io::poly_to_json(p)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_qlink, m) {
  m.doc() = "Exact quantum-group link invariants (JSON-returning core bindings)";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def(
      "rt_invariant",
      [](const std::string& braid, const std::optional<std::vector<std::string>>& colors, bool ambient) {
        const auto norm = ambient ? invariant::Normalization::ambient : invariant::Normalization::none;
        return poly_doc(invariant::rt_invariant(load(braid, colors), norm), "v");
      },
      py::arg("braid"), py::arg("colors") = py::none(), py::arg("ambient") = false);

  m.def(
      "kauffman_bracket", [](const std::string& braid) { return poly_doc(invariant::kauffman_bracket(braid::parse(braid)), "x"); },
      py::arg("braid"));

  m.def(
      "cs_invariant",
      [](const std::string& braid) { return poly_doc(invariant::cs_invariant_fundamental(braid::parse(braid)), "v"); },
      py::arg("braid"));

  m.def(
      "r_matrix",
      [](const std::string& j1, const std::string& j2, const std::string& variant) {
        rmatrix::Variant v = rmatrix::Variant::plain;
        if (variant == "inverse") {
          v = rmatrix::Variant::inverse;
        } else if (variant == "braided") {
          v = rmatrix::Variant::braided;
        } else if (variant == "braided-inverse") {
          v = rmatrix::Variant::braided_inverse;
        } else if (variant == "opposite") {
          v = rmatrix::Variant::opposite;
        } else if (variant != "plain") {
          throw UsageError("unknown variant '" + variant + "'");
        }
        return io::operator_to_json(rmatrix::get({Spin::parse(j1), Spin::parse(j2), v})).dump();
      },
      py::arg("j1"), py::arg("j2"), py::arg("variant") = "plain");

  m.def(
      "verify_aw",
      [](const std::string& spins, const std::string& suite) {
        const auto s = aw::parse_suite(suite);
        if (!s) throw UsageError("unknown suite '" + suite + "'");
        py::gil_scoped_release release;
        return io::report_to_json(aw::run_suite(*s, aw::TripleShape::parse(spins))).dump();
      },
      py::arg("spins"), py::arg("suite") = "all");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
