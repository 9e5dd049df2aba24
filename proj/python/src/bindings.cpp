#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riesz/asymptotics.hpp"
#include "riesz/dyadic.hpp"
#include "riesz/errors.hpp"
#include "riesz/phase_symbol.hpp"
#include "riesz/spectrum.hpp"

namespace py = pybind11;
using namespace riesz;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase-space bounds and spectra for U + U^-1 + V + zeta V^-1";

  // Subclasses first so pybind11 tries them before their bases.
  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", PyExc_ValueError);
  static py::exception<EmptyRegionError> empty(m, "EmptyRegionError", domain.ptr());
  static py::exception<AccuracyError> accuracy(m, "AccuracyError", error.ptr());
  static py::exception<InfeasibleGridError> infeasible(m, "InfeasibleGridError", error.ptr());
  static py::exception<ConvergenceError> convergence(m, "ConvergenceError", error.ptr());
  static py::exception<SolverError> solver(m, "SolverError", error.ptr());
  static py::exception<RangeError> range(m, "RangeError", error.ptr());
  static py::exception<ResolutionError> resolution(m, "ResolutionError", error.ptr());
  static py::exception<UnsupportedError> unsupported(m, "UnsupportedError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const EmptyRegionError& e) {
      empty(e.what());
    } catch (const DomainError& e) {
      domain(e.what());
    } catch (const AccuracyError& e) {
      accuracy(e.what());
    } catch (const InfeasibleGridError& e) {
      infeasible(e.what());
    } catch (const ConvergenceError& e) {
      convergence(e.what());
    } catch (const SolverError& e) {
      solver(e.what());
    } catch (const RangeError& e) {
      range(e.what());
    } catch (const ResolutionError& e) {
      resolution(e.what());
    } catch (const UnsupportedError& e) {
      unsupported(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double b, double zeta, double a) {
             ModelParams p{b, zeta, a};
             p.validate();
             return p;
           }),
           py::arg("b") = 1.0, py::arg("zeta") = 1.0, py::arg("a") = 2.0 * std::numbers::pi)
      .def_readwrite("b", &ModelParams::b)
      .def_readwrite("zeta", &ModelParams::zeta)
      .def_readwrite("a", &ModelParams::a)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(b=" + std::to_string(p.b) + ", zeta=" + std::to_string(p.zeta) +
               ", a=" + std::to_string(p.a) + ")";
      });

  py::class_<CoherentConstants>(m, "CoherentConstants")
      .def_readonly("d1", &CoherentConstants::d1)
      .def_readonly("d2", &CoherentConstants::d2);

  py::class_<PhaseSymbol>(m, "PhaseSymbol")
      .def(py::init([](double c1, double c2, double b) {
             PhaseSymbol s{c1, c2, b};
             s.validate();
             return s;
           }),
           py::arg("c1"), py::arg("c2"), py::arg("b"))
      .def_readonly("c1", &PhaseSymbol::c1)
      .def_readonly("c2", &PhaseSymbol::c2)
      .def_readonly("b", &PhaseSymbol::b)
      .def("minimum", &PhaseSymbol::minimum);

  py::class_<BoundIntegrals>(m, "BoundIntegrals")
      .def_readonly("i1", &BoundIntegrals::i1)
      .def_readonly("i2", &BoundIntegrals::i2);

  m.def("coherent_constants", &coherent_constants, py::arg("a"), py::arg("b"));
  m.def("optimal_window", &optimal_window, py::arg("b"));
  m.def("k_cutoff", &k_cutoff, py::arg("lam"), py::arg("sym"));
  m.def("phase_volume_reduced", &phase_volume_reduced, py::arg("lam"), py::arg("sym"),
        py::arg("rel_tol") = 1e-10);
  m.def("phase_volume_quad2d", &phase_volume_quad2d, py::arg("lam"), py::arg("sym"),
        py::arg("rel_tol") = 1e-9);
  m.def("bound_integrals", &bound_integrals, py::arg("lam"), py::arg("params"),
        py::arg("rel_tol") = 1e-10);
  m.def("simple_upper_bound", &simple_upper_bound, py::arg("lam"), py::arg("params"));

  py::class_<DyadicShell>(m, "DyadicShell")
      .def_readonly("j", &DyadicShell::j)
      .def_readonly("A", &DyadicShell::A)
      .def_readonly("B", &DyadicShell::B)
      .def_readonly("empty", &DyadicShell::empty);
  py::class_<DyadicTerm>(m, "DyadicTerm")
      .def_readonly("j", &DyadicTerm::j)
      .def_readonly("strip", &DyadicTerm::strip)
      .def_readonly("weighted", &DyadicTerm::weighted);
  py::class_<DyadicSums>(m, "DyadicSums")
      .def_readonly("lower", &DyadicSums::lower)
      .def_readonly("upper", &DyadicSums::upper)
      .def_readonly("j_min_used", &DyadicSums::j_min_used)
      .def_readonly("j_max", &DyadicSums::j_max)
      .def_readonly("terms", &DyadicSums::terms);

  m.def("shell", &shell, py::arg("j"), py::arg("lam"), py::arg("c"));
  m.def("shell_index_max", &shell_index_max, py::arg("lam"), py::arg("c"));
  m.def("strip_integral", &strip_integral, py::arg("A"), py::arg("B"),
        py::arg("rel_tol") = 1e-12);
  m.def("shell_closed_bounds", [](double B) {
    const ClosedBounds cb = shell_closed_bounds(B);
    return py::make_tuple(cb.lower, cb.upper);
  }, py::arg("B"));
  m.def("dyadic_sums", &dyadic_sums, py::arg("lam"), py::arg("c"), py::arg("b"),
        py::arg("tail_tol") = 1e-12);
  m.def("log_square_antiderivative", &log_square_antiderivative, py::arg("t"));
  m.def("proof_chain_upper", &proof_chain_upper, py::arg("lam"), py::arg("b"), py::arg("d"));
  m.def("proof_chain_lower", &proof_chain_lower, py::arg("lam"), py::arg("b"),
        py::arg("d_prime"));

  m.def("leading_term", &leading_term, py::arg("lam"), py::arg("b"));
  m.def("theorem1_expression", &theorem1_expression, py::arg("lam"), py::arg("b"));
  m.def("weyl_constant_zeta", &weyl_constant_zeta, py::arg("b"));
  m.def("c_mn", [](int mm, int n) {
    const Rational r = c_mn(mm, n);
    return py::make_tuple(r.num, r.den);
  }, py::arg("m"), py::arg("n"));

  py::class_<Grid>(m, "Grid")
      .def_readonly("L", &Grid::L)
      .def_readonly("N", &Grid::N)
      .def_readonly("center", &Grid::center);
  py::class_<RefinementLevel>(m, "RefinementLevel")
      .def_readonly("N", &RefinementLevel::N)
      .def_readonly("L", &RefinementLevel::L)
      .def_readonly("safety", &RefinementLevel::safety)
      .def_readonly("cap", &RefinementLevel::cap)
      .def_readonly("drift", &RefinementLevel::drift);
  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("grid", &Spectrum::grid)
      .def_readonly("params", &Spectrum::params)
      .def_readonly("converged_below", &Spectrum::converged_below)
      .def_readonly("drift", &Spectrum::drift)
      .def_readonly("cap_drift", &Spectrum::cap_drift)
      .def_readonly("trace", &Spectrum::trace)
      .def("riesz_mean", &riesz_mean, py::arg("lam"))
      .def("counting", &counting, py::arg("lam"));

  m.def("design_grid", &design_grid, py::arg("lambda_cut"), py::arg("params"),
        py::arg("safety"), py::arg("cap") = kKineticCap);
  m.def("spectrum", [](const ModelParams& p, double lambda_cut, double tol) {
    py::gil_scoped_release release;
    return refine_until_converged(p, lambda_cut, tol);
  }, py::arg("params"), py::arg("lambda_cut"), py::arg("tol") = 1e-8);
  m.def("spectrum_from_values", &spectrum_from_values, py::arg("eigenvalues"),
        py::arg("converged_below"), py::arg("params") = ModelParams{});
}
