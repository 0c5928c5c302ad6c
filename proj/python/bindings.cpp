#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fanobott/cohomology.hpp"
#include "fanobott/fan.hpp"
#include "fanobott/forest.hpp"
#include "fanobott/io.hpp"
#include "fanobott/matrix.hpp"
#include "fanobott/ops.hpp"

namespace py = pybind11;
using namespace fanobott;

namespace {

using Rows = std::vector<std::vector<int>>;

FanoBottMatrix to_fb(const Rows& rows) {
  const IntMatrix m = IntMatrix::from_rows(rows);
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  return validate(m);
}

Mode to_mode(const std::string& s) {
  if (auto m = parse_mode(s)) return *m;
  throw std::invalid_argument("unknown mode: " + s);
}

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fano Bott matrices, signed rooted forests and their equivalences";

  py::register_exception<InvalidMatrix>(m, "InvalidMatrix", PyExc_ValueError);

  m.def("validate", [](const Rows& rows) { return to_fb(rows).entries().to_rows(); },
        py::arg("rows"), "Return the matrix if it lies in FB(d), else raise InvalidMatrix.");

  m.def("enumerate", [](int d) {
    std::vector<Rows> out;
    for_each_matrix(d, [&](const FanoBottMatrix& a) { out.push_back(a.entries().to_rows()); });
    return out;
  }, py::arg("d"));

  m.def("count", &fano_bott_count, py::arg("d"), "(2d-1)!!");

  m.def("to_phi_sigma", [](const Rows& rows) {
    const PhiSigma ps = to_phi_sigma(to_fb(rows));
    std::vector<std::optional<std::string>> sigma;
    for (const auto& s : ps.sigma) {
      if (s) sigma.emplace_back(std::string(1, to_char(*s)));
      else sigma.emplace_back();
    }
    return py::make_tuple(ps.phi, sigma);
  }, py::arg("rows"));

  m.def("from_phi_sigma", [](const std::vector<int>& phi,
                             const std::vector<std::optional<std::string>>& sigma) {
    PhiSigma ps{static_cast<int>(phi.size()), phi, {}};
    for (const auto& s : sigma) {
      if (!s) ps.sigma.emplace_back();
      else ps.sigma.emplace_back(*s == "+" ? Sign::Plus : Sign::Minus);
    }
    return from_phi_sigma(ps).entries().to_rows();
  }, py::arg("phi"), py::arg("sigma"));

  m.def("canonical_code", [](const Rows& rows, const std::string& mode) {
    return canonical_code(from_matrix(to_fb(rows)), to_mode(mode)).text;
  }, py::arg("rows"), py::arg("mode") = "diffeo");

  m.def("equivalent", [](const Rows& a, const Rows& b, const std::string& mode) {
    return equivalent(from_matrix(to_fb(a)), from_matrix(to_fb(b)), to_mode(mode));
  }, py::arg("a"), py::arg("b"), py::arg("mode") = "diffeo");

  m.def("op1", [](const Rows& rows, const Permutation& perm) {
    return op1(IntMatrix::from_rows(rows), perm).to_rows();
  }, py::arg("rows"), py::arg("perm"));
  m.def("op2", [](const Rows& rows, int k) { return op2(to_fb(rows), k).entries().to_rows(); },
        py::arg("rows"), py::arg("k"));
  m.def("op3", [](const Rows& rows, int k, int l) {
    return op3(to_fb(rows), k, l).entries().to_rows();
  }, py::arg("rows"), py::arg("k"), py::arg("l"));

  m.def("replay", [](const Rows& rows, const py::object& witness) {
    return replay(to_fb(rows), witness_from_json(from_py(witness)).steps).entries().to_rows();
  }, py::arg("rows"), py::arg("witness"));

  m.def("find_witness", [](const Rows& a, const Rows& b, const std::string& mode) -> py::object {
    auto w = find_witness(to_fb(a), to_fb(b), to_mode(mode));
    if (!w) return py::none();
    return to_py(to_json(*w));
  }, py::arg("a"), py::arg("b"), py::arg("mode") = "diffeo");

  m.def("certify_diffeo", [](const Rows& a, const Rows& b, const py::object& witness) {
    return to_py(to_json(certify_diffeo(to_fb(a), to_fb(b), witness_from_json(from_py(witness)))));
  }, py::arg("a"), py::arg("b"), py::arg("witness"));

  m.def("enumerate_sve", [](const Rows& rows) { return to_py(to_json(enumerate_sve(to_fb(rows)))); },
        py::arg("rows"));
  m.def("peel_signature", [](const Rows& rows) { return peel_signature(to_fb(rows)); },
        py::arg("rows"));
  m.def("cut_rank_gf2", [](const Rows& rows, const std::vector<int>& s) {
    return cut_rank_gf2(to_fb(rows), s);
  }, py::arg("rows"), py::arg("subset"));

  m.def("rays", [](const Rows& rows) { return rays(to_fb(rows)).matrix().to_rows(); },
        py::arg("rows"));
  m.def("render_dot", [](const Rows& rows) { return render_dot(from_matrix(to_fb(rows))); },
        py::arg("rows"));

  m.attr("__version__") = "0.1.0";
}
