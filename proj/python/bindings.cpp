#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "leastgrad/cantor.hpp"
#include "leastgrad/curve.hpp"
#include "leastgrad/errors.hpp"
#include "leastgrad/geometry.hpp"
#include "leastgrad/grid.hpp"
#include "leastgrad/regions.hpp"
#include "leastgrad/solver.hpp"
#include "leastgrad/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_leastgrad, m) {
  m.doc() = "Chord trees over concave arcs and least-gradient experiments";

  py::register_exception<lg::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<lg::RefusedError>(m, "RefusedError", PyExc_RuntimeError);
  py::register_exception<lg::VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<lg::ConcaveArc>(m, "ConcaveArc")
      .def_readonly("name", &lg::ConcaveArc::name)
      .def_readonly("eta", &lg::ConcaveArc::eta)
      .def_readonly("sup_fp", &lg::ConcaveArc::supFp)
      .def_readonly("sup_fpp", &lg::ConcaveArc::supFpp)
      .def("f", [](const lg::ConcaveArc& a, double x) { return a.f(x); })
      .def("height", &lg::ConcaveArc::height);
  m.def("circle_arc", &lg::make_circle_arc, py::arg("eta"), py::arg("radius") = 1.0);
  m.def("parabola_arc", &lg::make_parabola_arc, py::arg("eta"), py::arg("coefficient") = 1.0);
  m.def("hypotheses_hold", &lg::hypotheses_hold);

  py::class_<lg::ChordNode>(m, "ChordNode")
      .def_readonly("level", &lg::ChordNode::level)
      .def_readonly("index", &lg::ChordNode::index)
      .def_readonly("a", &lg::ChordNode::a)
      .def_readonly("b", &lg::ChordNode::b)
      .def_readonly("arc_length", &lg::ChordNode::arcLen)
      .def_property_readonly("length", [](const lg::ChordNode& n) { return n.chord.len; });

  py::class_<lg::CantorTree, std::shared_ptr<lg::CantorTree>>(m, "CantorTree")
      .def_property_readonly("depth", &lg::CantorTree::depth)
      .def("level", &lg::CantorTree::level, py::return_value_policy::reference_internal)
      .def("chord_sum", [](const lg::CantorTree& t, int N) { return t.stats(N).c; })
      .def("longest_chord", [](const lg::CantorTree& t, int N) { return t.stats(N).mu; })
      .def("arc_sum", [](const lg::CantorTree& t, int N) { return lg::measure_bounds(t, N).arcSum; })
      .def("export", &lg::export_tree);
  m.def("build_tree", [](const lg::ConcaveArc& arc, int depth) {
    return std::make_shared<lg::CantorTree>(lg::build_tree(arc, depth));
  });
  m.def("import_tree", [](const std::string& text) {
    return std::make_shared<lg::CantorTree>(lg::import_tree(text));
  });
  m.def("fatness_product", &lg::fatness_product);

  py::class_<lg::RegionDecomposition, std::shared_ptr<lg::RegionDecomposition>>(m, "Regions")
      .def(py::init([](std::shared_ptr<lg::CantorTree> t) {
        return std::make_shared<lg::RegionDecomposition>(std::shared_ptr<const lg::CantorTree>(t));
      }))
      .def("classify",
           [](const lg::RegionDecomposition& r, double x, double y, int N) {
             const lg::Classification c = r.classify({x, y}, N);
             return py::make_tuple(std::string(lg::to_string(c.tag)), c.component);
           })
      .def("psi",
           [](const lg::RegionDecomposition& r, double x, double y, int N) {
             const lg::Point p = r.psi({x, y}, N);
             return py::make_tuple(p.x, p.y);
           })
      .def("v_field", [](const lg::RegionDecomposition& r, double x, double y, int N) -> py::object {
        const lg::FieldValue v = r.v_field({x, y}, N);
        if (!v.defined) return py::none();
        return py::make_tuple(v.v.x, v.v.y);
      });

  py::class_<lg::SolveReport>(m, "SolveReport")
      .def_readonly("tv", &lg::SolveReport::tv)
      .def_readonly("l1_norm", &lg::SolveReport::l1Norm)
      .def_readonly("iterations", &lg::SolveReport::iterations)
      .def_readonly("gap", &lg::SolveReport::primalDualGap)
      .def_readonly("converged", &lg::SolveReport::converged);
  m.def(
      "solve_disc_arc",
      [](double y0, int n, double tolerance, std::int64_t maxIter) {
        const lg::DiscDomain disc({0.0, 0.0}, 1.0);
        lg::GridField g = lg::make_grid(disc, n);
        lg::apply_trace(g, disc, lg::disc_arc_datum(y0), 0.0);
        lg::SolverConfig cfg;
        cfg.tolerance = tolerance;
        cfg.maxIter = maxIter;
        return lg::least_gradient_solve(g, cfg).report;
      },
      py::arg("y0"), py::arg("n"), py::arg("tolerance") = 1e-4, py::arg("max_iter") = 20000);

  m.def(
      "verify",
      [](const lg::ConcaveArc& arc, int depth, bool modelSuite) {
        lg::VerifyConfig cfg;
        cfg.depth = depth;
        cfg.modelSuite = modelSuite;
        return lg::run_verification(arc, cfg).to_json();
      },
      py::arg("arc"), py::arg("depth") = 8, py::arg("model_suite") = false,
      "Runs the verification checks and returns the report as JSON text.");
}
