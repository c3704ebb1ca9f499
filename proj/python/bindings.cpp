#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gorbit/cli.hpp"
#include "gorbit/constructions.hpp"
#include "gorbit/error.hpp"
#include "gorbit/go_checker.hpp"
#include "gorbit/io.hpp"
#include "gorbit/structure.hpp"

namespace py = pybind11;
using namespace gorbit;

namespace {

Json subspace_json(const Subspace& s) { return to_json(s); }

std::string nilradical_of(const std::string& text) {
  const LieAlgebra g = build_algebra(parse_algebra_text(text));
  return subspace_json(nilradical(g)).dump();
}

std::string radical_of(const std::string& text) {
  const LieAlgebra g = build_algebra(parse_algebra_text(text));
  return subspace_json(radical(g)).dump();
}

std::string killing_of(const std::string& text) {
  const LieAlgebra g = build_algebra(parse_algebra_text(text));
  return to_json(killing_form(g)).dump();
}

std::string go_check_of(const std::string& text, std::size_t samples, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.sample_count = samples;
  cfg.seed = seed;
  return go_check(build_space(parse_algebra_text(text)), cfg).to_json().dump();
}

std::string construct_of(const std::string& kind, const std::string& alpha, std::size_t n, const std::string& c_scale,
                         std::size_t copies, const std::string& variant) {
  const auto k = parse_construction_kind(kind);
  if (!k) throw Error(ErrorKind::InvalidArgument, "unknown construction kind '" + kind + "'");
  ConstructionParams p;
  p.kind = *k;
  p.alpha = parse_rational(alpha);
  p.n = n;
  p.c_scale = parse_rational(c_scale);
  p.copies = copies;
  p.variant = variant;
  const Construction c = construct(p);
  return canonical_dump(to_json(algebra_file_of(c.space, c.levi)));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact geodesic-orbit analysis of reductive homogeneous spaces";
  m.attr("__version__") = kToolVersion;

  static py::handle gorbit_error = py::register_exception<Error>(m, "GorbitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
      if (!e.location().empty()) msg += " at " + e.location();
      PyErr_SetString(gorbit_error.ptr(), msg.c_str());
    }
  });

  m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
  m.def("nilradical", &nilradical_of, py::arg("algebra_json"));
  m.def("radical", &radical_of, py::arg("algebra_json"));
  m.def("killing_form", &killing_of, py::arg("algebra_json"));
  m.def("go_check", &go_check_of, py::arg("algebra_json"), py::arg("samples") = 64, py::arg("seed") = 0);
  m.def("construct", &construct_of, py::arg("kind"), py::arg("alpha") = "2", py::arg("n") = 2,
        py::arg("c_scale") = "1", py::arg("copies") = 3, py::arg("variant") = "killing_orthogonal");
  m.def("construction_kinds", [] {
    std::vector<std::string> out;
    for (const auto k : all_construction_kinds()) out.emplace_back(to_string(k));
    return out;
  });
}
