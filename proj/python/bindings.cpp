#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leg/cellular.hpp"
#include "leg/filler.hpp"
#include "leg/fixtures.hpp"
#include "leg/io.hpp"
#include "leg/render.hpp"

namespace py = pybind11;
using namespace leg;

namespace {

PlatWord word_of(const std::string& s) {
  for (const Fixture& f : fixtures())
    if (f.name == s) return parse_word(f.word);
  return parse_word(s);
}

py::dict invariants(const std::string& s) {
  PlatWord w = word_of(s);
  auto inv = classical_invariants(w);
  py::dict d;
  d["tb"] = inv.tb;
  d["rot"] = inv.rot;
  d["writhe"] = inv.writhe;
  d["components"] = components(w).count;
  d["crossings"] = static_cast<int>(crossing_letters(w).size());
  if (components(w).count == 1) d["determinant"] = knot_determinant(w);
  return d;
}

int class_count(const std::string& s, int rho) {
  PlatWord w = word_of(s);
  auto ctx = context_for(w, maslov_potential(w, rho));
  return static_cast<int>(homotopy_classes(reduce_dga(ctx->cell.dga).reduced).size());
}

std::vector<std::vector<int>> aforms(const std::string& s, int rho) {
  PlatWord w = word_of(s);
  std::vector<std::vector<int>> out;
  for (const AFormData& a : enumerate_aforms(w, maslov_potential(w, rho))) out.push_back(crossing_numbers(w, a));
  return out;
}

std::string fill(const std::string& s, int rho, const std::vector<int>& numbers) {
  PlatWord w = word_of(s);
  auto cert = synthesize_filling(w, maslov_potential(w, rho), aform_from_numbers(w, numbers));
  return certificate_to_json(cert).dump();
}

py::tuple verify(const std::string& cert_json) {
  auto rep = verify_certificate(certificate_from_json(Json::parse(cert_json)));
  return py::make_tuple(rep.pass, rep.frame, rep.rule, rep.reason);
}

}  // namespace

PYBIND11_MODULE(pyleg, m) {
  static py::exception<Error> err(m, "LegError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      err(e.what());
    }
  });
  m.def("normalize", [](const std::string& s) { return render_word(word_of(s)); });
  m.def("fixture_names", [] {
    std::vector<std::string> v;
    for (const Fixture& f : fixtures()) v.push_back(f.name);
    return v;
  });
  m.def("invariants", &invariants);
  m.def("class_count", &class_count, py::arg("word"), py::arg("rho") = 0);
  m.def("aforms", &aforms, py::arg("word"), py::arg("rho") = 0);
  m.def("fill", &fill, py::arg("word"), py::arg("rho"), py::arg("marks"));
  m.def("verify", &verify);
  m.def("front_svg", [](const std::string& s) { return front_svg(word_of(s)); });
}
